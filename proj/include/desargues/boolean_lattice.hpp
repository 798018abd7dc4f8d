#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

namespace desargues::boolean {

inline constexpr unsigned kMaxGroundSize = 16;
inline constexpr unsigned kMaxScanGroundSize = 4;

/// Ground set {0, ..., size-1}.
class GroundSet {
 public:
  /// Throws PreconditionError unless 1 <= size <= kMaxGroundSize.
  explicit GroundSet(unsigned size);
  unsigned size() const noexcept { return size_; }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << size_) - 1; }
  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  unsigned size_;
};

/// Subset of a ground set stored as a bitmask.
class Subset {
 public:
  /// Throws PreconditionError if a bit at position >= ground.size() is set.
  Subset(GroundSet ground, std::uint32_t bits);
  static Subset empty(GroundSet ground) { return {ground, 0}; }

  GroundSet ground() const noexcept { return ground_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool contains(unsigned element) const noexcept { return (bits_ >> element) & 1U; }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  GroundSet ground_;
  std::uint32_t bits_;
};

// Set operations throw PreconditionError on ground-set mismatch.
Subset join(const Subset& a, const Subset& b);
Subset meet(const Subset& a, const Subset& b);
Subset complement(const Subset& a);
bool leq(const Subset& a, const Subset& b);

/// Two triplets (A1, A2, A3) and (A'1, A'2, A'3). Distinctness is required
/// within each triplet only.
struct DesarguesInput {
  GroundSet ground;
  std::array<Subset, 3> a;
  std::array<Subset, 3> a_prime;
};

/// Throws PreconditionError on ground mismatch or a repeated subset inside a triplet.
void validate(const DesarguesInput& input);

/// Quantities built from an input, all indices 0-based:
/// sides[k] / sides_prime[k] is the join of the two members other than k
/// (B_ij, B'_ij with {i,j,k} = {0,1,2}), cross_points[k] = sides[k] meet
/// sides_prime[k], cross_joins[i] = a[i] join a_prime[i].
struct Derived {
  std::array<Subset, 3> sides;
  std::array<Subset, 3> sides_prime;
  std::array<Subset, 3> cross_points;
  std::array<Subset, 3> cross_joins;
};

Derived derive(const DesarguesInput& input);

/// cross_joins[0] meet cross_joins[1] is contained in cross_joins[2].
bool antecedent(const Derived& d);
/// cross_points[2] is contained in cross_points[0] join cross_points[1].
bool consequent(const Derived& d);

/// (C1 AND C2) OR C3. Equals C3 exactly when the antecedent holds.
Subset circuit_antecedent(const DesarguesInput& input);
/// B3 AND (B1 OR B2). Equals B3 exactly when the consequent holds.
Subset circuit_consequent(const DesarguesInput& input);

struct ScanReport {
  unsigned ground_size = 0;
  std::uint64_t raw_tuples = 0;
  std::uint64_t total = 0;
  std::uint64_t antecedent_true = 0;
  std::uint64_t consequent_true = 0;
  std::uint64_t violations = 0;
  /// Smallest tuple (ordered by A1, A2, A3, A'1, A'2, A'3 as integers) with
  /// consequent true and antecedent false.
  std::optional<DesarguesInput> converse_counterexample;
};

/// Reference enumeration over all raw six-tuples through the Subset API.
/// Throws PreconditionError when ground.size() > kMaxScanGroundSize.
ScanReport scan_serial(GroundSet ground);

/// Same enumeration as scan_serial on raw bitmasks, split across `threads`
/// OpenMP threads (0 means the runtime default). Results are identical to
/// scan_serial for every thread count.
ScanReport scan_parallel(GroundSet ground, int threads = 0);

/// Entry point used by callers: scan_parallel, or scan_serial when threads == 1.
ScanReport exhaustive_scan(GroundSet ground, int threads = 1);

/// Uniform random valid input (rejection sampling on triplet distinctness).
/// Requires ground.size() >= 2.
DesarguesInput random_input(GroundSet ground, std::mt19937_64& rng);

}  // namespace desargues::boolean
