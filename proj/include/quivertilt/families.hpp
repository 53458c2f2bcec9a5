#ifndef QUIVERTILT_FAMILIES_HPP
#define QUIVERTILT_FAMILIES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "quivertilt/phi.hpp"
#include "quivertilt/quiver.hpp"

namespace quivertilt {

struct NonOriented {
  int n1 = 0, k1 = 0, n2 = 0, k2 = 0, r = 0;
  bool operator==(const NonOriented&) const = default;
};

struct Oriented {
  int k = 0, n = 0, t = 0;
  bool operator==(const Oriented&) const = default;
};

using NormalFormParams = std::variant<NonOriented, Oriented>;

std::string to_string(const NormalFormParams& p);  // "N(6,4,5,3,1)" / "B(1,2,3)"
nlohmann::json params_to_json(const NormalFormParams& p);

// Number of extra separating arrows needed to split `relations` consecutive
// relations into runs of at most m-1: ceil(relations/(m-1)) - 1. Requires m >= 2.
int separation_excess(int relations, int m);

// Description of the first violated inequality, or nullopt when valid.
std::optional<std::string> params_violation(const NormalFormParams& p, int m);
void check_params(const NormalFormParams& p, int m);  // throws DomainError

BoundQuiver build_normal_form(const NormalFormParams& p, int m);
// Skips the free-arrow bound; only needs the shape to be drawable (used to
// compare against generalized normal forms).
BoundQuiver build_normal_form_unchecked(const NormalFormParams& p, int m);
PhiInvariant phi_formula(const NormalFormParams& p, int m);

struct DerivedParams {
  int s1 = 0, s2 = 0, k1 = 0, k2 = 0, r = 0;
  int m = 1;
  bool oriented = false;
  bool operator==(const DerivedParams&) const = default;
};

std::string to_string(const DerivedParams& d);
nlohmann::json derived_to_json(const DerivedParams& d);

DerivedParams derived_from(const NormalFormParams& p, int m);
NormalFormParams normal_form_of(const DerivedParams& d);

// Reads the parameters off an algebra with root. Quivers with rays are
// first reduced to normal form. Throws DomainError("not in class: ...").
DerivedParams extract_params(const BoundQuiver& q);

// Counts on a quiver without rays whose saturated cycles each share exactly
// one arrow with the root; nullopt when the quiver does not have that shape.
std::optional<DerivedParams> read_normal_shape(const BoundQuiver& q);

bool decide_derived_equivalent(const DerivedParams& a, const DerivedParams& b);

NonOriented shift_cycles(const NonOriented& p, int x, int m);

// p itself when it satisfies the free-arrow bound, else the first valid
// parameter set reachable by a cycle shift, possibly mirrored (the mirror
// draws the same quiver). Reduction can end on an invalid generalized form
// whose class still holds a valid one.
std::optional<NormalFormParams> valid_representative(const NormalFormParams& p, int m);

struct ConditionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RecognitionReport {
  std::vector<ConditionResult> conditions;
  bool ok() const;
  std::optional<std::string> first_failure() const;
  nlohmann::json to_json() const;
};

RecognitionReport recognize_m_cluster_tilted(const BoundQuiver& q);
// Conditions (a)-(c) of the definition, then "phi": some valid normal form
// with |r| = 0 mod m has the same phi and size.
RecognitionReport recognize_branched(const BoundQuiver& q);

// The first valid normal form (|r|, or n-1, divisible by m) whose phi_formula
// equals compute_phi(q) and whose size matches q.
std::optional<NormalFormParams> cluster_normal_form_with_phi(const BoundQuiver& q);

struct Bb10Shape {
  int m1 = 0, m2 = 0, p = 0, q = 0;
  bool operator==(const Bb10Shape&) const = default;
};

std::optional<Bb10Shape> bb10_shape(const PhiInvariant& phi);

struct CollisionReport {
  NonOriented a, b;
  int m = 2;
  PhiInvariant phi_a, phi_b;
  bool phi_equal = false;
  bool isomorphic = false;
  std::size_t arrows_a = 0, arrows_b = 0;
  bool connected_by_shift = false;  // b == shift_cycles(a, x) for some x
  bool theorem_equivalent = false;  // decide_derived_equivalent on the pair
  std::string text() const;
  nlohmann::json to_json() const;
};

CollisionReport phi_collision_demo(int m = 2);

}  // namespace quivertilt

#endif  // QUIVERTILT_FAMILIES_HPP
