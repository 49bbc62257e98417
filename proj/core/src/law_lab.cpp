#include "pftop/law_lab.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

#include "pftop/construction.hpp"
#include "pftop/error.hpp"
#include "pftop/expr.hpp"
#include "pftop/fixtures.hpp"
#include "pftop/relations.hpp"
#include "pftop/topology_check.hpp"

namespace pftop::laws {

namespace {

std::vector<LawInfo> build_catalog() {
  using S = InstanceSource;
  auto law = [](LawId id, std::string_view code, std::string_view statement, int arity, S source,
                std::vector<std::string_view> clauses, std::vector<bool> informational = {},
                bool independent = false) {
    if (informational.empty()) informational.assign(clauses.size(), false);
    return LawInfo{id, code, statement, arity, source, std::move(clauses), std::move(informational), independent};
  };
  return {
      law(LawId::L01, "L01", "equal sets are fixed by union and intersection", 2, S::Tuples,
          {"a = b => a | b = b & a = a"}),
      law(LawId::L02, "L02", "union and intersection commute", 2, S::Tuples, {"a | b = b | a", "a & b = b & a"}),
      law(LawId::L03, "L03", "union and intersection associate", 3, S::Tuples,
          {"a | (b | c) = (a | b) | c", "a & (b & c) = (a & b) & c"}),
      law(LawId::L04, "L04", "a | b = b & a = a exactly when a is balanced below b", 2, S::Tuples,
          {"a balanced b => a | b = b & a = a", "a | b = b & a = a => a balanced b"}),
      law(LawId::L05, "L05", "union and intersection respect mu + rho + sigma <= 1", 2, S::Tuples,
          {"a | b is a picture fuzzy set", "a & b is a picture fuzzy set"}),
      law(LawId::L06, "L06", "union and intersection distribute over each other", 3, S::Tuples,
          {"a | (b & c) = (a | b) & (a | c)", "a & (b | c) = (a & b) | (a & c)"}),
      law(LawId::L07, "L07", "an intersection lies below both operands", 2, S::Tuples,
          {"a & b <= a", "a & b <= b"}),
      law(LawId::L08, "L08", "a <= b exactly when a & b = a", 2, S::Tuples,
          {"a <= b => a & b = a", "a & b = a => a <= b"}),
      law(LawId::L09, "L09", "a <= a | b exactly when rho_a <= rho_b", 2, S::Tuples,
          {"a <= a | b => rho_a <= rho_b", "rho_a <= rho_b => a <= a | b"}),
      law(LawId::L10, "L10", "a, b <= a | b exactly when rho_a = rho_b", 2, S::Tuples,
          {"a <= a | b and b <= a | b => rho_a = rho_b", "rho_a = rho_b => a <= a | b and b <= a | b"}),
      law(LawId::L11, "L11", "for rho_a = rho_b, a <= b exactly when a | b = b", 2, S::Tuples,
          {"rho_a = rho_b and a <= b => a | b = b", "rho_a = rho_b and a | b = b => a <= b"}),
      law(LawId::L12, "L12", "equality is rho-equivalence plus balance", 2, S::Tuples,
          {"a = b => a ~rho b and a balanced b", "a ~rho b and a balanced b => a = b"}),
      law(LawId::L13, "L13", "rho-equivalent sets satisfy the four inclusion properties, and only they do", 2,
          S::Tuples,
          {"a ~rho b => inclusion properties (i)-(iv)", "inclusion properties (i)-(iv) => a ~rho b"}),
      law(LawId::L14, "L14", "rho-equivalent sets lie between O and I", 2, S::Tuples,
          {"a ~rho b => a <= I and b <= I", "a ~rho b => O <= a and O <= b"}),
      law(LawId::L15, "L15", "position of arbitrary sets relative to O and I", 1, S::Tuples,
          {"O <= a for every a", "a <= I for every a"}, {}, true),
      law(LawId::L16, "L16", "an intersection-closed family generates a topology", 2, S::Subbases,
          {"intersection closure is a base", "generated family satisfies the topology axioms",
           "the base covers every generated member", "every provenance expression replays"}),
      law(LawId::L17, "L17", "smallest topology containing a balanced chain", 3, S::BalancedChains,
          {"generated topology = {I, O} + chain + {O | c1}", "{I, O} + chain + {O | c1} satisfies the axioms",
           "{I, O} + chain satisfies the axioms"},
          {false, false, true}),
      law(LawId::L18, "L18", "a sub-base of a rank-n topology has at least n - 1 members", 2,
          S::MinimalSubbases, {"rank(generate(S)) <= |S| + 1"}),
      law(LawId::L19, "L19", "complement exchanges union and intersection", 2, S::Tuples,
          {"~(a | b) = ~a & ~b", "~(a & b) = ~a | ~b"}),
  };
}

bool same_rho(const PictureFuzzySet& a, const PictureFuzzySet& b) { return rho_equivalent(a, b); }

bool rho_le(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rho > b[i].rho) return false;
  }
  return true;
}

bool all_valid(const PictureFuzzySet& s) {
  return std::all_of(s.triples().begin(), s.triples().end(), [](const MembershipTriple& t) { return is_valid(t); });
}

Family named_family(std::span<const PictureFuzzySet> sets, std::string_view prefix) {
  Family out(sets.front().universe());
  for (std::size_t i = 0; i < sets.size(); ++i) out.add(std::string(prefix) + std::to_string(i + 1), sets[i]);
  return out;
}

/// Clears ok[i] for every violated clause; returns a detail line for witnesses.
std::string evaluate(LawId law, std::span<const PictureFuzzySet> x, InclusionMode mode, std::vector<char>& ok) {
  const auto inc = [mode](const PictureFuzzySet& p, const PictureFuzzySet& q) { return includes(p, q, mode); };
  const auto require = [&ok](std::size_t clause, bool holds) {
    if (!holds) ok[clause] = 0;
  };

  switch (law) {
    case LawId::L01: {
      const auto& a = x[0];
      const auto& b = x[1];
      require(0, !(a == b) || (unite(a, b) == a && intersect(b, a) == a));
      return {};
    }
    case LawId::L02: {
      const auto& a = x[0];
      const auto& b = x[1];
      require(0, unite(a, b) == unite(b, a));
      require(1, intersect(a, b) == intersect(b, a));
      return {};
    }
    case LawId::L03: {
      const auto& a = x[0];
      const auto& b = x[1];
      const auto& c = x[2];
      require(0, unite(a, unite(b, c)) == unite(unite(a, b), c));
      require(1, intersect(a, intersect(b, c)) == intersect(intersect(a, b), c));
      return {};
    }
    case LawId::L04: {
      const auto& a = x[0];
      const auto& b = x[1];
      const bool absorbed = unite(a, b) == a && intersect(b, a) == a;
      const bool bal = balanced(a, b);
      require(0, !bal || absorbed);
      require(1, !absorbed || bal);
      return {};
    }
    case LawId::L05: {
      require(0, all_valid(unite(x[0], x[1])));
      require(1, all_valid(intersect(x[0], x[1])));
      return {};
    }
    case LawId::L06: {
      const auto& a = x[0];
      const auto& b = x[1];
      const auto& c = x[2];
      require(0, unite(a, intersect(b, c)) == intersect(unite(a, b), unite(a, c)));
      require(1, intersect(a, unite(b, c)) == unite(intersect(a, b), intersect(a, c)));
      return {};
    }
    case LawId::L07: {
      const auto meet = intersect(x[0], x[1]);
      require(0, inc(meet, x[0]));
      require(1, inc(meet, x[1]));
      return {};
    }
    case LawId::L08: {
      const bool below = inc(x[0], x[1]);
      const bool absorbed = intersect(x[0], x[1]) == x[0];
      require(0, !below || absorbed);
      require(1, !absorbed || below);
      return {};
    }
    case LawId::L09: {
      const bool below = inc(x[0], unite(x[0], x[1]));
      const bool rho = rho_le(x[0], x[1]);
      require(0, !below || rho);
      require(1, !rho || below);
      return {};
    }
    case LawId::L10: {
      const auto join = unite(x[0], x[1]);
      const bool both = inc(x[0], join) && inc(x[1], join);
      const bool rho = same_rho(x[0], x[1]);
      require(0, !both || rho);
      require(1, !rho || both);
      return {};
    }
    case LawId::L11: {
      if (same_rho(x[0], x[1])) {
        const bool below = inc(x[0], x[1]);
        const bool absorbed = unite(x[0], x[1]) == x[1];
        require(0, !below || absorbed);
        require(1, !absorbed || below);
      }
      return {};
    }
    case LawId::L12: {
      const bool equal = x[0] == x[1];
      const bool both = same_rho(x[0], x[1]) && balanced(x[0], x[1]);
      require(0, !equal || both);
      require(1, !both || equal);
      return {};
    }
    case LawId::L13: {
      const auto& a = x[0];
      const auto& b = x[1];
      const auto meet = intersect(a, b);
      const auto join = unite(a, b);
      const bool p1 = inc(meet, a) && inc(meet, b);
      const bool p2 = inc(a, b) == (meet == a);
      const bool p3 = inc(a, join) && inc(b, join);
      const bool p4 = inc(a, b) == (join == b);
      const bool props = p1 && p2 && p3 && p4;
      const bool rho = same_rho(a, b);
      require(0, !rho || props);
      require(1, !props || rho);
      return {};
    }
    case LawId::L14: {
      const auto& a = x[0];
      const auto& b = x[1];
      if (same_rho(a, b)) {
        const auto full = PictureFuzzySet::full(a.universe());
        const auto null = PictureFuzzySet::null(a.universe());
        require(0, inc(a, full) && inc(b, full));
        require(1, inc(null, a) && inc(null, b));
      }
      return {};
    }
    case LawId::L15: {
      const auto& a = x[0];
      require(0, inc(PictureFuzzySet::null(a.universe()), a));
      require(1, inc(a, PictureFuzzySet::full(a.universe())));
      return {};
    }
    case LawId::L16: {
      const Family subbase = named_family(x, "S");
      const auto trace = generate_from_subbase(subbase);
      require(0, check_base(trace.base).is_base);
      const bool is_topology = check_axioms(trace.topology).is_topology;
      require(1, is_topology);
      require(2, is_topology && verify_base_for(trace.topology, trace.base).is_base_for);
      bool replays = true;
      for (const auto& m : trace.topology.members()) {
        replays = replays && expr::evaluate(trace.provenance.at(m.name), subbase) == m.set;
      }
      require(3, replays);
      return {};
    }
    case LawId::L17: {
      const Family chain = named_family(x, "C");
      const auto trace = chain_topology(chain);
      const Universe& u = chain.universe();
      Family literal = trivial_topology(u);
      for (const auto& m : chain.members()) {
        if (!literal.contains(m.set)) literal.add(m.name, m.set);
      }
      Family restated = literal;
      if (const auto z = zero_rho_join(x[0]); !restated.contains(z)) restated.add("Z", z);
      require(0, same_values(trace.topology, restated));
      require(1, check_axioms(restated).is_topology);
      require(2, check_axioms(literal).is_topology);
      return {};
    }
    case LawId::L18: {
      const Family subbase = named_family(x, "S");
      const auto rank = rank_of(generate_from_subbase(subbase).topology).value;
      require(0, rank <= x.size() + 1);
      return "rank " + std::to_string(rank) + ", |S| + 1 = " + std::to_string(x.size() + 1);
    }
    case LawId::L19: {
      const auto& a = x[0];
      const auto& b = x[1];
      require(0, complement(unite(a, b)) == intersect(complement(a), complement(b)));
      require(1, complement(intersect(a, b)) == unite(complement(a), complement(b)));
      return {};
    }
  }
  return {};
}

bool is_boundary(const PictureFuzzySet& s) { return s.is_full() || s.is_null(); }

bool chain_ok(std::span<const PictureFuzzySet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (is_boundary(sets[i])) return false;
    if (i > 0 && (sets[i - 1] == sets[i] || !balanced(sets[i - 1], sets[i]))) return false;
  }
  return true;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  // Uniform draw by rejection, independent of the library distributions.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

using Visit = std::function<void(std::span<const PictureFuzzySet>)>;

class DomainWalker {
 public:
  DomainWalker(const SearchDomain& domain, int arity, InstanceSource source)
      : domain_(domain), arity_(arity), source_(source), triples_(grid_triples(domain.grade_step)) {
    std::vector<std::string> labels;
    for (int i = 0; i < domain.universe_size; ++i) labels.push_back("x" + std::to_string(i + 1));
    universe_.emplace(std::move(labels));
  }

  void run(const Visit& visit) {
    if (std::holds_alternative<Exhaustive>(domain_.strategy)) {
      exhaustive(visit);
    } else {
      randomized(std::get<Randomized>(domain_.strategy), visit);
    }
    if (domain_.include_fixtures) fixtures(visit);
  }

 private:
  std::uint64_t set_count() const {
    return saturating_pow(triples_.size(), domain_.universe_size);
  }

  std::uint64_t estimate() const {
    const std::uint64_t n = set_count();
    switch (source_) {
      case InstanceSource::Tuples: return saturating_pow(n, arity_);
      case InstanceSource::Subbases:
      case InstanceSource::MinimalSubbases: return saturating_pow(n, arity_);
      case InstanceSource::BalancedChains: return saturating_mul(n, arity_ > 1 ? n : 1);
    }
    return UINT64_MAX;
  }

  std::vector<PictureFuzzySet> all_sets() const {
    const std::size_t n = domain_.universe_size;
    std::vector<std::size_t> idx(n, 0);
    std::vector<PictureFuzzySet> out;
    for (;;) {
      std::vector<MembershipTriple> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = triples_[idx[i]];
      out.emplace_back(*universe_, std::move(t));
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < triples_.size()) break;
        idx[pos] = 0;
        if (pos == 0) return out;
      }
    }
  }

  void exhaustive(const Visit& visit) {
    if (estimate() > domain_.instance_budget) {
      throw Error(ErrorKind::DomainTooLarge, "exhaustive search over " + describe(domain_) + " exceeds the budget of " +
                                                 std::to_string(domain_.instance_budget) + " instances");
    }
    const auto sets = all_sets();
    std::vector<PictureFuzzySet> tuple;
    switch (source_) {
      case InstanceSource::Tuples: {
        std::vector<std::size_t> idx(arity_, 0);
        for (;;) {
          tuple.clear();
          for (auto i : idx) tuple.push_back(sets[i]);
          visit(tuple);
          int pos = arity_;
          while (pos > 0) {
            --pos;
            if (++idx[pos] < sets.size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
          }
        }
      }
      case InstanceSource::Subbases:
      case InstanceSource::MinimalSubbases: {
        std::vector<PictureFuzzySet> inner;
        for (const auto& s : sets) {
          if (!is_boundary(s)) inner.push_back(s);
        }
        for (int size = 1; size <= arity_; ++size) combinations(inner, size, 0, tuple, visit);
        return;
      }
      case InstanceSource::BalancedChains: {
        for (const auto& s : sets) {
          if (is_boundary(s)) continue;
          tuple.assign(1, s);
          extend_chain(sets, tuple, visit);
        }
        return;
      }
    }
  }

  void combinations(const std::vector<PictureFuzzySet>& pool, int size, std::size_t start,
                    std::vector<PictureFuzzySet>& tuple, const Visit& visit) {
    if (static_cast<int>(tuple.size()) == size) {
      emit_subbase(tuple, visit);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      tuple.push_back(pool[i]);
      combinations(pool, size, i + 1, tuple, visit);
      tuple.pop_back();
    }
  }

  void emit_subbase(std::span<const PictureFuzzySet> subbase, const Visit& visit) {
    if (source_ == InstanceSource::MinimalSubbases &&
        !check_subbase_minimality(named_family(subbase, "S")).is_minimal) {
      return;
    }
    visit(subbase);
  }

  void extend_chain(const std::vector<PictureFuzzySet>& sets, std::vector<PictureFuzzySet>& chain,
                    const Visit& visit) {
    visit(chain);
    if (static_cast<int>(chain.size()) == arity_) return;
    for (const auto& s : sets) {
      const auto& last = chain.back();
      if (s == last || !balanced(last, s)) continue;
      chain.push_back(s);
      extend_chain(sets, chain, visit);
      chain.pop_back();
    }
  }

  PictureFuzzySet random_set(std::mt19937_64& rng) const {
    std::vector<MembershipTriple> t(domain_.universe_size);
    for (auto& triple : t) triple = triples_[draw_below(rng, triples_.size())];
    return PictureFuzzySet(*universe_, std::move(t));
  }

  PictureFuzzySet random_inner_set(std::mt19937_64& rng) const {
    for (;;) {
      auto s = random_set(rng);
      if (!is_boundary(s)) return s;
    }
  }

  std::optional<PictureFuzzySet> raise_rho(std::mt19937_64& rng, const PictureFuzzySet& from) const {
    const Grade::Raw step = domain_.grade_step.raw();
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<MembershipTriple> t(from.triples().begin(), from.triples().end());
      for (auto& triple : t) {
        const Grade::Raw slack = Grade::kScale - triple.mu.raw() - triple.rho.raw() - triple.sigma.raw();
        const auto steps = static_cast<std::uint64_t>(slack / step);
        triple.rho = Grade::from_raw(triple.rho.raw() + static_cast<Grade::Raw>(draw_below(rng, steps + 1)) * step);
      }
      PictureFuzzySet next(*universe_, std::move(t));
      if (!(next == from)) return next;
    }
    return std::nullopt;
  }

  void randomized(const Randomized& r, const Visit& visit) {
    std::mt19937_64 rng(r.seed);
    std::vector<PictureFuzzySet> tuple;
    for (std::uint64_t n = 0; n < r.sample_count; ++n) {
      tuple.clear();
      switch (source_) {
        case InstanceSource::Tuples:
          for (int i = 0; i < arity_; ++i) tuple.push_back(random_set(rng));
          visit(tuple);
          break;
        case InstanceSource::Subbases:
        case InstanceSource::MinimalSubbases: {
          const auto size = 1 + draw_below(rng, arity_);
          while (tuple.size() < size) {
            auto s = random_inner_set(rng);
            if (std::find(tuple.begin(), tuple.end(), s) == tuple.end()) tuple.push_back(std::move(s));
          }
          emit_subbase(tuple, visit);
          break;
        }
        case InstanceSource::BalancedChains: {
          const auto size = 1 + draw_below(rng, arity_);
          tuple.push_back(random_inner_set(rng));
          while (tuple.size() < size) {
            auto next = raise_rho(rng, tuple.back());
            if (!next) break;
            tuple.push_back(std::move(*next));
          }
          visit(tuple);
          break;
        }
      }
    }
  }

  void fixtures(const Visit& visit) {
    if (source_ == InstanceSource::Tuples) return;
    for (const auto& f : fixtures::reference_subbases()) {
      const auto sets = f.family.sets();
      if (source_ == InstanceSource::BalancedChains) {
        if (chain_ok(sets)) visit(sets);
      } else {
        emit_subbase(sets, visit);
      }
    }
  }

  const SearchDomain& domain_;
  int arity_;
  InstanceSource source_;
  std::vector<MembershipTriple> triples_;
  std::optional<Universe> universe_;
};

void validate(const SearchDomain& domain) {
  if (domain.universe_size < 1 || domain.universe_size > 3) {
    throw Error(ErrorKind::InvalidDomain, "universe size must be 1, 2 or 3");
  }
  if (domain.arity < 0 || domain.arity > 4) {
    throw Error(ErrorKind::InvalidDomain, "arity must be between 1 and 4 (0 for the law's own arity)");
  }
  grid_triples(domain.grade_step);
}

ClauseVerdict& clause_at(LawVerdict& v, std::size_t i) { return v.clauses[i]; }

void finish(LawVerdict& v) {
  const LawInfo& law = info(v.law);
  bool any_fail = false;
  bool any_hold = false;
  for (const auto& c : v.clauses) {
    if (c.informational) continue;
    (c.holds ? any_hold : any_fail) = true;
  }
  v.outcome = !any_fail ? Outcome::Holds
              : (law.independent_claims && any_hold) ? Outcome::Split
                                                     : Outcome::Counterexample;
  v.vacuous = v.checked_count == 0;
}

LawVerdict empty_verdict(LawId id) {
  const LawInfo& law = info(id);
  LawVerdict v{id, Outcome::Holds, {}, {}, 0, false};
  for (std::size_t i = 0; i < law.clauses.size(); ++i) {
    v.clauses.push_back({std::string(law.clauses[i]), law.informational[i], true, 0, std::nullopt});
  }
  return v;
}

void run_domain(LawVerdict& v, const SearchDomain& domain, InclusionMode mode) {
  validate(domain);
  const LawInfo& law = info(v.law);
  const int arity = domain.arity ? domain.arity : law.arity;
  if (law.source == InstanceSource::Tuples && arity < law.arity) {
    throw Error(ErrorKind::InvalidDomain,
                std::string(law.code) + " quantifies over " + std::to_string(law.arity) + " sets");
  }

  DomainRun run{domain, 0};
  std::vector<char> ok(law.clauses.size());
  DomainWalker walker(domain, arity, law.source);
  walker.run([&](std::span<const PictureFuzzySet> instance) {
    ++run.instances;
    std::fill(ok.begin(), ok.end(), 1);
    std::string detail;
    try {
      detail = evaluate(v.law, instance, mode, ok);
    } catch (const Error& e) {
      std::fill(ok.begin(), ok.end(), 0);
      detail = e.what();
    }
    for (std::size_t i = 0; i < ok.size(); ++i) {
      auto& clause = clause_at(v, i);
      ++clause.checked;
      if (ok[i]) continue;
      clause.holds = false;
      if (!clause.witness) {
        clause.witness = Witness{std::vector<PictureFuzzySet>(instance.begin(), instance.end()), detail};
      }
    }
  });
  v.checked_count += run.instances;
  v.runs.push_back(std::move(run));
}

}  // namespace

std::span<const LawInfo> catalog() {
  static const std::vector<LawInfo> laws = build_catalog();
  return laws;
}

const LawInfo& info(LawId id) { return catalog()[static_cast<std::size_t>(id) - 1]; }

LawId parse_law_id(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'L' || text[0] == 'l')) {
    const auto digits = text.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        digits.size() <= 2) {
      const int n = std::stoi(std::string(digits));
      if (n >= 1 && n <= static_cast<int>(catalog().size())) return static_cast<LawId>(n);
    }
  }
  throw Error(ErrorKind::UnknownLaw, "'" + std::string(text) + "' is not a law identifier (L01..L19)");
}

std::string describe(const SearchDomain& domain) {
  std::string out = "|X|=" + std::to_string(domain.universe_size) + ", step " + to_decimal(domain.grade_step);
  if (domain.arity) out += ", arity " + std::to_string(domain.arity);
  if (const auto* r = std::get_if<Randomized>(&domain.strategy)) {
    out += ", randomized " + std::to_string(r->sample_count) + " samples, seed " + std::to_string(r->seed);
  } else {
    out += ", exhaustive";
  }
  if (domain.include_fixtures) out += ", with reference sub-bases";
  return out;
}

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Holds: return "Holds";
    case Outcome::Counterexample: return "Counterexample";
    case Outcome::Split: return "Split";
  }
  return "Unknown";
}

std::vector<MembershipTriple> grid_triples(Grade step) {
  const Grade::Raw s = step.raw();
  if (s != 2500 && s != 1000 && s != 500) {
    throw Error(ErrorKind::InvalidDomain, "grade step must be 0.25, 0.10 or 0.05, got " + to_decimal(step));
  }
  std::vector<MembershipTriple> out;
  for (Grade::Raw mu = 0; mu <= Grade::kScale; mu += s) {
    for (Grade::Raw rho = 0; mu + rho <= Grade::kScale; rho += s) {
      for (Grade::Raw sigma = 0; mu + rho + sigma <= Grade::kScale; sigma += s) {
        out.push_back({Grade::from_raw(mu), Grade::from_raw(rho), Grade::from_raw(sigma)});
      }
    }
  }
  return out;
}

LawVerdict check_law(LawId law, const SearchDomain& domain, InclusionMode mode) {
  return check_law(law, std::span<const SearchDomain>(&domain, 1), mode);
}

LawVerdict check_law(LawId law, std::span<const SearchDomain> domains, InclusionMode mode) {
  LawVerdict v = empty_verdict(law);
  for (const auto& d : domains) run_domain(v, d, mode);
  finish(v);
  return v;
}

std::vector<LawVerdict> run_catalog(const SearchDomain& domain, InclusionMode mode) {
  std::vector<LawVerdict> out;
  for (const auto& law : catalog()) out.push_back(check_law(law.id, domain, mode));
  return out;
}

std::vector<SearchDomain> default_domains(LawId law, std::uint64_t seed) {
  const LawInfo& l = info(law);
  SearchDomain base;
  base.include_fixtures = l.source != InstanceSource::Tuples;
  std::vector<SearchDomain> out{base};
  if (l.arity == 3) {
    SearchDomain sampled;
    sampled.universe_size = 2;
    sampled.strategy = Randomized{kDefaultSamples, seed};
    out.push_back(sampled);
  }
  return out;
}

std::vector<LawVerdict> run_default_catalog(InclusionMode mode, std::uint64_t seed) {
  std::vector<LawVerdict> out;
  for (const auto& law : catalog()) out.push_back(check_law(law.id, default_domains(law.id, seed), mode));
  return out;
}

std::vector<std::string> failed_clauses(LawId law, std::span<const PictureFuzzySet> instance, InclusionMode mode) {
  const LawInfo& l = info(law);
  std::vector<char> ok(l.clauses.size(), 1);
  evaluate(law, instance, mode, ok);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (!ok[i]) out.emplace_back(l.clauses[i]);
  }
  return out;
}

}  // namespace pftop::laws
