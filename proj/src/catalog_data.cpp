#include "kforms/catalog_data.hpp"

#include "embedded_data.inc"

namespace kforms::detail {

const char* embedded_catalog(int n, int k) {
  if (n == 6 && k == 3) return embedded_catalog_6_3;
  if (n == 7 && k == 3) return embedded_catalog_7_3;
  if (n == 8 && k == 3) return embedded_catalog_8_3;
  return nullptr;
}

}  // namespace kforms::detail
