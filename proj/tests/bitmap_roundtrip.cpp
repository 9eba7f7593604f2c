// bitmap_roundtrip <file> <basis> <bound> <h>
// Loads a bitmap written by `sumsetlab sumset --out` and compares it with a
// freshly computed hA. Exit 0 on a bit-identical match.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sumsetlab/sumsetlab.h"

int main(int argc, char** argv) {
  if (argc != 5) {
    std::fprintf(stderr, "usage: %s <file> <basis> <bound> <h>\n", argv[0]);
    return 2;
  }
  ssl_bitmap* loaded = nullptr;
  ssl_basis* basis = nullptr;
  ssl_bitmap* base = nullptr;
  ssl_bitmap* folded = nullptr;
  if (ssl_bitmap_load(argv[1], &loaded) != SSL_OK || ssl_basis_parse(argv[2], &basis) != SSL_OK ||
      ssl_bitmap_from_basis(basis, std::stoull(argv[3]), &base) != SSL_OK ||
      ssl_hfold(base, static_cast<uint32_t>(std::stoul(argv[4])), 1, &folded) != SSL_OK) {
    std::fprintf(stderr, "error: %s\n", ssl_last_error_message());
    return 1;
  }
  const int same = ssl_bitmap_equal(loaded, folded);
  std::printf("%s\n", same ? "identical" : "DIFFERENT");
  ssl_bitmap_destroy(loaded);
  ssl_bitmap_destroy(base);
  ssl_bitmap_destroy(folded);
  ssl_basis_destroy(basis);
  return same ? 0 : 1;
}
