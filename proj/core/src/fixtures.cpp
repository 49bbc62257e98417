#include "pftop/fixtures.hpp"

#include <array>
#include <initializer_list>

namespace pftop::fixtures {

namespace {

using Row = std::array<const char*, 3>;

struct NamedRows {
  const char* name;
  std::array<Row, 3> rows;
};

Family build(std::initializer_list<NamedRows> specs) {
  const Universe u = abc();
  Family out(u);
  for (const auto& spec : specs) {
    std::vector<MembershipTriple> triples;
    for (const auto& [mu, rho, sigma] : spec.rows) {
      triples.push_back({grade_from_decimal(mu), grade_from_decimal(rho), grade_from_decimal(sigma)});
    }
    out.add(spec.name, PictureFuzzySet(u, std::move(triples)));
  }
  return out;
}

}  // namespace

Universe abc() {
  static const Universe u({"a", "b", "c"});
  return u;
}

Family union_not_upper_bound() {
  return build({
      {"A1", {{{"0.50", "0.20", "0.25"}, {"0.40", "0.10", "0.50"}, {"0.20", "0.30", "0.45"}}}},
      {"A2", {{{"0.40", "0.30", "0.10"}, {"0.20", "0.60", "0.10"}, {"0.30", "0.20", "0.15"}}}},
  });
}

Family union_absorbs_without_inclusion() {
  return build({
      {"A1", {{{"0.30", "0.20", "0.25"}, {"0.10", "0.30", "0.50"}, {"0.20", "0.20", "0.45"}}}},
      {"A2", {{{"0.40", "0.15", "0.10"}, {"0.20", "0.25", "0.10"}, {"0.30", "0.20", "0.15"}}}},
  });
}

Family incomparable_pair() {
  return build({
      {"K1", {{{"0.25", "0.20", "0.30"}, {"0.35", "0.10", "0.45"}, {"0.30", "0.35", "0.10"}}}},
      {"K2", {{{"0.45", "0.20", "0.35"}, {"0.25", "0.10", "0.40"}, {"0.50", "0.35", "0.05"}}}},
  });
}

Family balanced_pair() {
  return build({
      {"A1", {{{"0.35", "0.20", "0.25"}, {"0.20", "0.15", "0.30"}, {"0.20", "0.35", "0.15"}}}},
      {"A2", {{{"0.35", "0.30", "0.25"}, {"0.20", "0.25", "0.30"}, {"0.20", "0.40", "0.15"}}}},
  });
}

Family rho_crossing_pair() {
  return build({
      {"R1", {{{"0.25", "0.50", "0.25"}, {"0.25", "0.25", "0.25"}, {"0.20", "0.30", "0.40"}}}},
      {"R2", {{{"0.25", "0.25", "0.25"}, {"0.25", "0.50", "0.25"}, {"0.20", "0.30", "0.40"}}}},
  });
}

Family double_chain() {
  return build({
      {"A1", {{{"0.10", "0.15", "0.40"}, {"0.20", "0.10", "0.35"}, {"0.20", "0.15", "0.20"}}}},
      {"A2", {{{"0.30", "0.15", "0.35"}, {"0.25", "0.10", "0.30"}, {"0.30", "0.15", "0.10"}}}},
      {"A3", {{{"0.10", "0.10", "0.40"}, {"0.20", "0.05", "0.35"}, {"0.20", "0.15", "0.20"}}}},
      {"A4", {{{"0.30", "0.10", "0.35"}, {"0.25", "0.05", "0.30"}, {"0.30", "0.15", "0.10"}}}},
  });
}

std::vector<NamedFamily> reference_subbases() {
  return {
      {"incomparable-pair", incomparable_pair()},
      {"balanced-pair", balanced_pair()},
      {"rho-crossing-pair", rho_crossing_pair()},
      {"double-chain", double_chain()},
  };
}

}  // namespace pftop::fixtures
