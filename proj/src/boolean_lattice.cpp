#include "desargues/boolean_lattice.hpp"

#include <omp.h>

#include <limits>
#include <string>

#include "desargues/errors.hpp"

namespace desargues::boolean {

namespace {

void require_same_ground(const Subset& a, const Subset& b) {
  if (!(a.ground() == b.ground())) {
    throw PreconditionError("subsets over ground sets of size " + std::to_string(a.ground().size()) + " and " +
                            std::to_string(b.ground().size()));
  }
}

bool distinct(const std::array<Subset, 3>& t) { return !(t[0] == t[1]) && !(t[0] == t[2]) && !(t[1] == t[2]); }

// Flags for one raw tuple; masks ordered A1, A2, A3, A'1, A'2, A'3.
struct TupleFlags {
  bool valid;
  bool antecedent;
  bool consequent;
};

inline TupleFlags evaluate_masks(const std::uint32_t m[6]) {
  const bool valid = m[0] != m[1] && m[0] != m[2] && m[1] != m[2] && m[3] != m[4] && m[3] != m[5] && m[4] != m[5];
  const std::uint32_t c1 = m[0] | m[3];
  const std::uint32_t c2 = m[1] | m[4];
  const std::uint32_t c3 = m[2] | m[5];
  const std::uint32_t f1 = (m[1] | m[2]) & (m[4] | m[5]);
  const std::uint32_t f2 = (m[0] | m[2]) & (m[3] | m[5]);
  const std::uint32_t f3 = (m[0] | m[1]) & (m[3] | m[4]);
  return {valid, ((c1 & c2) & ~c3) == 0, (f3 & ~(f1 | f2)) == 0};
}

DesarguesInput input_from_index(GroundSet ground, std::uint64_t index) {
  const unsigned n = ground.size();
  const std::uint64_t mask = ground.full_mask();
  std::array<std::uint32_t, 6> m{};
  for (int slot = 5; slot >= 0; --slot) {
    m[slot] = static_cast<std::uint32_t>(index & mask);
    index >>= n;
  }
  return {ground,
          {Subset(ground, m[0]), Subset(ground, m[1]), Subset(ground, m[2])},
          {Subset(ground, m[3]), Subset(ground, m[4]), Subset(ground, m[5])}};
}

void require_scannable(GroundSet ground) {
  if (ground.size() > kMaxScanGroundSize) {
    throw PreconditionError("exhaustive scan supports ground sets of size <= " + std::to_string(kMaxScanGroundSize) +
                            ", got " + std::to_string(ground.size()));
  }
}

}  // namespace

GroundSet::GroundSet(unsigned size) : size_(size) {
  if (size < 1 || size > kMaxGroundSize) {
    throw PreconditionError("ground set size must be in [1, " + std::to_string(kMaxGroundSize) + "], got " +
                            std::to_string(size));
  }
}

Subset::Subset(GroundSet ground, std::uint32_t bits) : ground_(ground), bits_(bits) {
  if ((bits & ~ground.full_mask()) != 0) {
    throw PreconditionError("subset has elements outside a ground set of size " + std::to_string(ground.size()));
  }
}

Subset join(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return {a.ground(), a.bits() | b.bits()};
}

Subset meet(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return {a.ground(), a.bits() & b.bits()};
}

Subset complement(const Subset& a) { return {a.ground(), ~a.bits() & a.ground().full_mask()}; }

bool leq(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

void validate(const DesarguesInput& input) {
  for (const auto* triplet : {&input.a, &input.a_prime}) {
    for (const Subset& s : *triplet) {
      if (!(s.ground() == input.ground)) throw PreconditionError("subset ground set differs from input ground set");
    }
  }
  if (!distinct(input.a)) throw PreconditionError("A1, A2, A3 must be pairwise distinct");
  if (!distinct(input.a_prime)) throw PreconditionError("A'1, A'2, A'3 must be pairwise distinct");
}

Derived derive(const DesarguesInput& input) {
  validate(input);
  const auto& a = input.a;
  const auto& ap = input.a_prime;
  Derived d{.sides = {join(a[1], a[2]), join(a[0], a[2]), join(a[0], a[1])},
            .sides_prime = {join(ap[1], ap[2]), join(ap[0], ap[2]), join(ap[0], ap[1])},
            .cross_points = {Subset::empty(input.ground), Subset::empty(input.ground), Subset::empty(input.ground)},
            .cross_joins = {join(a[0], ap[0]), join(a[1], ap[1]), join(a[2], ap[2])}};
  for (int k = 0; k < 3; ++k) d.cross_points[k] = meet(d.sides[k], d.sides_prime[k]);
  return d;
}

bool antecedent(const Derived& d) { return leq(meet(d.cross_joins[0], d.cross_joins[1]), d.cross_joins[2]); }

bool consequent(const Derived& d) { return leq(d.cross_points[2], join(d.cross_points[0], d.cross_points[1])); }

Subset circuit_antecedent(const DesarguesInput& input) {
  const Derived d = derive(input);
  return join(meet(d.cross_joins[0], d.cross_joins[1]), d.cross_joins[2]);
}

Subset circuit_consequent(const DesarguesInput& input) {
  const Derived d = derive(input);
  return meet(d.cross_points[2], join(d.cross_points[0], d.cross_points[1]));
}

ScanReport scan_serial(GroundSet ground) {
  require_scannable(ground);
  ScanReport report;
  report.ground_size = ground.size();
  const std::uint32_t count = std::uint32_t{1} << ground.size();
  report.raw_tuples = std::uint64_t{1} << (6 * ground.size());

  for (std::uint32_t a1 = 0; a1 < count; ++a1)
    for (std::uint32_t a2 = 0; a2 < count; ++a2)
      for (std::uint32_t a3 = 0; a3 < count; ++a3)
        for (std::uint32_t b1 = 0; b1 < count; ++b1)
          for (std::uint32_t b2 = 0; b2 < count; ++b2)
            for (std::uint32_t b3 = 0; b3 < count; ++b3) {
              DesarguesInput input{ground,
                                   {Subset(ground, a1), Subset(ground, a2), Subset(ground, a3)},
                                   {Subset(ground, b1), Subset(ground, b2), Subset(ground, b3)}};
              if (!distinct(input.a) || !distinct(input.a_prime)) continue;
              const Derived d = derive(input);
              const bool ante = antecedent(d);
              const bool cons = consequent(d);
              ++report.total;
              report.antecedent_true += ante;
              report.consequent_true += cons;
              if (ante && !cons) ++report.violations;
              if (cons && !ante && !report.converse_counterexample) report.converse_counterexample = input;
            }
  return report;
}

ScanReport scan_parallel(GroundSet ground, int threads) {
  require_scannable(ground);
  const unsigned n = ground.size();
  const std::uint64_t raw = std::uint64_t{1} << (6 * n);
  const std::uint64_t mask = ground.full_mask();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t total = 0, ante_true = 0, cons_true = 0, violations = 0;
  std::uint64_t first_converse = kNone;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for num_threads(nthreads) schedule(static) \
    reduction(+ : total, ante_true, cons_true, violations) reduction(min : first_converse)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(raw); ++t) {
    std::uint64_t rest = static_cast<std::uint64_t>(t);
    std::uint32_t m[6];
    for (int slot = 5; slot >= 0; --slot) {
      m[slot] = static_cast<std::uint32_t>(rest & mask);
      rest >>= n;
    }
    const TupleFlags f = evaluate_masks(m);
    if (!f.valid) continue;
    ++total;
    ante_true += f.antecedent;
    cons_true += f.consequent;
    violations += (f.antecedent && !f.consequent);
    if (f.consequent && !f.antecedent && static_cast<std::uint64_t>(t) < first_converse) {
      first_converse = static_cast<std::uint64_t>(t);
    }
  }

  ScanReport report;
  report.ground_size = n;
  report.raw_tuples = raw;
  report.total = total;
  report.antecedent_true = ante_true;
  report.consequent_true = cons_true;
  report.violations = violations;
  if (first_converse != kNone) report.converse_counterexample = input_from_index(ground, first_converse);
  return report;
}

ScanReport exhaustive_scan(GroundSet ground, int threads) {
  return threads == 1 ? scan_serial(ground) : scan_parallel(ground, threads);
}

DesarguesInput random_input(GroundSet ground, std::mt19937_64& rng) {
  if (ground.size() < 2) throw PreconditionError("random_input needs at least 4 subsets, i.e. ground size >= 2");
  const std::uint64_t mask = ground.full_mask();
  for (;;) {
    std::uint32_t m[6];
    for (auto& x : m) x = static_cast<std::uint32_t>(rng() & mask);
    DesarguesInput input{ground,
                         {Subset(ground, m[0]), Subset(ground, m[1]), Subset(ground, m[2])},
                         {Subset(ground, m[3]), Subset(ground, m[4]), Subset(ground, m[5])}};
    if (distinct(input.a) && distinct(input.a_prime)) return input;
  }
}

}  // namespace desargues::boolean
