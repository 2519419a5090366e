#include "doctest.h"
#include "property_suite.hpp"

TEST_CASE("core property suite") {
  for (const auto& p : mathbook::props::core_properties()) {
    SUBCASE(p.name.c_str()) {
      const auto r = p.check();
      INFO(r.detail);
      CHECK(r.passed);
    }
  }
}
