#ifndef DEGEN_WITNESS_HPP
#define DEGEN_WITNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "degen/variety.hpp"

namespace degen {

/// Upper-triangular matrix with the given diagonal runs, ones on the
/// superdiagonal and zeros elsewhere. With pairwise distinct values the
/// result is cyclic with one Jordan block of size `multiplicity` per value.
Matrix regular_block(const std::vector<std::pair<Scalar, int>>& diagonal);

enum class WitnessMode { SemisimpleToX, XToU };

const char* witness_mode_name(WitnessMode mode) noexcept;
WitnessMode parse_witness_mode(const std::string& text);

struct DiagonalRun {
  std::size_t slot;
  int multiplicity;
};

struct WitnessBlock {
  std::vector<DiagonalRun> diagonal;
  int size() const noexcept;
};

/// A block-diagonal family of regular blocks whose diagonal entries are
/// parameter slots. Giving the slots pairwise distinct values lands in
/// `generic_type`; collapsing each slot onto `specialization[slot]` (and
/// keeping the collapsed values distinct) lands in `special_type`.
struct WitnessFamily {
  WitnessMode mode;
  int n = 0;
  std::vector<std::string> slots;
  std::vector<WitnessBlock> blocks;
  std::vector<std::size_t> specialization;
  VarietyDescriptor generic_type;
  VarietyDescriptor special_type;

  /// Matrix at the given slot values.
  Matrix evaluate(const std::vector<Scalar>& values) const;
  /// Slot values of the special fiber over a generic assignment.
  std::vector<Scalar> specialize(const std::vector<Scalar>& values) const;
  /// Slots that are their own specialization target.
  std::vector<std::size_t> target_slots() const;
};

/// Per eigenvalue j and part m of delta_j, one block of size m with diagonal
/// slots a_{j,1..m}. Generic: semisimple with eigenspace dims transpose(gamma).
/// Special (a_{j,i} -> a_{j,1}): X(delta).
WitnessFamily family_semisimple_to_x(const JordanData& delta);

/// Per part gamma_j of gamma = sum delta, one block of size gamma_j whose
/// diagonal carries alpha_i with multiplicity (delta_i)_j. Generic: X(delta).
/// Special (alpha_i -> alpha_1): U(gamma).
WitnessFamily family_x_to_u(const JordanData& delta);

WitnessFamily make_family(WitnessMode mode, const JordanData& delta);

struct FiberCheck {
  std::vector<Scalar> values;
  std::string fiber;  // "generic", "special", or "curve t=<v>"
  JordanData observed;
  std::int64_t commutant;
  bool type_ok;
};

struct WitnessReport {
  WitnessFamily family;
  FieldSpec field;
  std::uint64_t seed;
  bool curve_mode;
  std::vector<FiberCheck> checks;
  std::int64_t expected_centralizer;
  bool pass;
};

/// Smallest prime p with p > slot count.
std::uint64_t first_admissible_prime(const WitnessFamily& family);

/// Samples `samples` assignments of pairwise distinct slot values (rejection
/// sampling from a generator seeded with `seed`), checks the Jordan type of
/// both fibers and that both commutants have the sandwich centralizer
/// dimension. Throws FieldTooSmall if the prime field has no more elements
/// than slots, and TypeMismatch naming the assignment on the first failure.
WitnessReport verify_witness(const WitnessFamily& family, FieldSpec field,
                             int samples, std::uint64_t seed);

/// Curve variant: slot = target + t * offset. Checks the fibers at
/// `curve_points` nonzero t (all generic) and at t = 0 (special).
WitnessReport verify_witness_curve(const WitnessFamily& family, FieldSpec field,
                                   int samples, std::uint64_t seed,
                                   int curve_points = 3);

}  // namespace degen

#endif
