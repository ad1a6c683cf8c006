#pragma once

// Reduced Killing forms and the Witt invariant kappa for groups of type E8
// built from four quaternion algebras and a scalar, and for groups from
// Tits's construction.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e8kit/qform.hpp"

namespace e8kit {

struct E8Input {
  Field field = Field::Q;
  std::array<Quaternion, 4> q{Quaternion(Field::Q, 1, 1), Quaternion(Field::Q, 1, 1), Quaternion(Field::Q, 1, 1),
                              Quaternion(Field::Q, 1, 1)};
  std::int64_t c = 1;

  /// Validates the field agreement and reduces c to its square class.
  static E8Input make(Field field, const std::array<std::pair<std::int64_t, std::int64_t>, 4>& slots, std::int64_t c);
};

/// 8<2c> - <2><1,-c> (sum Q'_i + sum_{i<j<l} Q'_i Q'_j Q'_l), 248-dimensional.
QForm red_killing_form(const E8Input& in);

/// <<c>> [4 sum N_i - 2 sum N_i N_j + sum N_i N_j N_l] for norm forms N_i.
QForm kappa(const E8Input& in);

/// <2> (8 - redkill), the definition of kappa applied to a reduced Killing form.
QForm kappa_from_redkill(const QForm& redkill);

struct RostClass {
  QForm representative{Field::Q};  ///< <<c>> (N1 + N2 + N3 + N4)
  bool is_zero = false;
};
RostClass rost_class(const E8Input& in);

/// Contribution of the adjoint D8 summand: <2><-1>(sum Q'_i + sum Q'_i Q'_j Q'_l).
QForm d8_adjoint_form(const E8Input& in);
/// Half-spin contribution <2><c m2> sum Q'Q'Q' + <c m4> sum (<2> Q_i + <6>).
QForm d8_half_spin_form(const E8Input& in, std::int64_t m2, std::int64_t m4);
/// 4<2c m4><1,3> + <2><-1, c m4> sum Q' + <2><-1, c m2> sum Q'Q'Q'.
QForm d8_mu_form(const E8Input& in, std::int64_t m2, std::int64_t m4);

enum class CheckStatus { pass, fail, not_witnessed, skipped };
std::string_view to_string(CheckStatus s);

struct VanishingRostReport {
  bool main_identity = false;   ///< kappa = 2<<c>> N1 N2 N4
  int kappa_level = 0;
  bool level_ok = false;        ///< i_level(kappa) >= 8
  bool subset_symmetry = false; ///< same with every 3-subset
  bool difference_squares = false; ///< <<c>>(N1 - N2)^2 = <<c>>(N3 - N4)^2
  bool product_vanishes = false;   ///< <<c>> N1 N2 (N3 - N4) = 0
  bool square_reduction = false;   ///< <<c>> N1 (N3 - N4)^2 = 4 <<c>> N1 (N1 - N2)
  CheckStatus scalar_status = CheckStatus::not_witnessed;
  std::optional<std::int64_t> scalar;  ///< m with <<c>>(N1 - N2) = <m><<c>>(N3 - N4)

  bool identities_hold() const { return main_identity && level_ok && subset_symmetry && difference_squares && product_vanishes && square_reduction; }
};

/// Requires a vanishing Rost class; throws std::domain_error otherwise.
VanishingRostReport vanishing_rost_check(const E8Input& in);

struct TitsInput {
  Field field = Field::Q;
  std::array<std::int64_t, 3> gamma3{1, 1, 1};
  std::array<std::int64_t, 3> phi3{1, 1, 1};
  std::array<std::int64_t, 5> phi5{1, 1, 1, 1, 1};

  /// Throws unless phi3 is a prefix of phi5.
  void validate() const;
};

struct TitsReport {
  QForm redkill{Field::Q};
  QForm kappa{Field::Q};
  bool rost15_zero = false;
};

/// <2>[8 - (4 g3 + 4 p3 + <2> g3 (p5 - p3))].
TitsReport tits_construction(const TitsInput& in);

enum class RealClass { split, e8_minus24, compact, not_applicable };
std::string_view to_string(RealClass c);

enum class IndexHint { split, rank4_d4_kernel, rank2_d6_kernel, undetermined };
std::string_view to_string(IndexHint h);

RealClass real_class_from_signature(int signature);

struct Classification {
  RealClass real_class = RealClass::not_applicable;
  IndexHint index_hint = IndexHint::undetermined;
};
Classification classify(const E8Input& in);

struct KillingReport {
  QForm redkill{Field::Q};
  QForm kappa{Field::Q};
  int kappa_i_level = 0;
  bool rost_zero = false;
  int signature = 0;
  RealClass real_class = RealClass::not_applicable;
  IndexHint index_hint = IndexHint::undetermined;
  bool kappa_consistent = false;  ///< kappa = <2>(8 - redkill) as Witt classes
  bool kappa_in_i5 = false;
};
KillingReport killing_report(const E8Input& in);

struct Pf4Report {
  QForm half_spin{Field::Q};
  QForm expected{Field::Q};  ///< 8 q1 q2
  bool matches = false;
};
/// Half-spin form with Q3 = Q1, Q4 = Q2 and c = m2 = m4 = 1, against 8 q1 q2.
Pf4Report example_pf4(Field field, std::array<std::int64_t, 2> q1, std::array<std::int64_t, 2> q2);

}  // namespace e8kit
