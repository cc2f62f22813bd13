// Scratch driver used while developing; not part of the shipped CLI.
#include "support/oracle.hpp"

#include "isometry.hpp"
#include "symbol.hpp"

#include <cstdio>

using namespace latref;
using namespace latref::testing;

int main(int argc, char** argv) {
  int n = argc > 1 ? atoi(argv[1]) : 2;
  long d = argc > 2 ? atol(argv[2]) : 4;
  auto classes = all_classes(n, d);
  printf("rank %d det %ld: %zu classes\n", n, d, classes.size());
  auto part = genus_partition(classes);
  for (auto& genus : part) {
    printf("genus:");
    for (int idx : genus) {
      printf(" [cls %d |O|=%s]", idx, to_string(aut_order(classes[idx])).c_str());
    }
    printf("  key=%s\n", canonical_key(genus_symbol(classes[genus[0]])).c_str());
  }
  return 0;
}
