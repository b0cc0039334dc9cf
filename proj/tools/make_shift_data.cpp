// Regenerates core/data/rosenbrock_shift.dat from its documented seed.
// The committed file is the artifact; this tool exists so the provenance
// stays reproducible. Usage: make_shift_data <output-path>

#include <cstdio>

#include "msde/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output-path>\n", argv[0]);
    return 2;
  }
  std::FILE* out = std::fopen(argv[1], "wb");
  if (!out) {
    std::perror("fopen");
    return 2;
  }
  std::fprintf(out,
               "# Shift vector o for the shifted Rosenbrock problem, 10 records.\n"
               "# columns: o   (components drawn uniformly from [-80, 80),\n"
               "#               mt19937_64 seed 20050905, 53-bit mapping)\n");
  for (double o : msde::generate_rosenbrock_shift())
    std::fprintf(out, "%.17g\n", o);
  std::fclose(out);
  return 0;
}
