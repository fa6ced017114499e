#include <stdexcept>

#include "doctest.h"
#include "msi/verify.hpp"

TEST_CASE("desk-scale suites pass") {
  for (const auto& name : msi::verify::suite_names()) {
    const auto report = msi::verify::run_suite(name);
    for (const auto& p : report.properties) {
      INFO(name << "/" << p.property << ": " << p.detail);
      CHECK(p.pass);
      CHECK(p.instances > 0);
    }
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(msi::verify::run_suite("nope"), std::domain_error); }

TEST_CASE("json report shape") {
  msi::verify::SuiteReport r;
  r.suite = "demo";
  r.properties.push_back({"p", 3, 0.5, true, ""});
  const auto text = msi::verify::to_json(r, -1);
  CHECK(text == R"({"suite":"demo","pass":true,"properties":[{"property":"p","instances":3,"max_error":0.5,"pass":true}]})");
}
