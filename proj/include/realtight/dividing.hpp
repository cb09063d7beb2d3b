#pragma once

#include "realtight/arith.hpp"
#include "realtight/slopes.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rt {

// Non-crossing perfect matching of 2m points 0..2m-1 in cyclic order; pairs stored (i < j), sorted.
struct DiskMatching {
  int m = 0;
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const DiskMatching&, const DiskMatching&) = default;
  friend auto operator<=>(const DiskMatching&, const DiskMatching&) = default;
};

bool is_perfect_matching(const DiskMatching& d);
bool is_noncrossing(const DiskMatching& d);
std::vector<DiskMatching> enumerate_disk_matchings(int m);
DiskMatching rotate(const DiskMatching& d, int steps);

Count count_disk_classes_fixed_arc(int m);
// Matchings that contain the neighbor pair (0, 1).
std::vector<DiskMatching> matchings_with_fixed_arc(int m);
// Orbits under the full cyclic rotation group.
int count_disk_rotation_orbits(int m);

enum class ArcKind { Inner, Outer, Traversing };

// Marked points sit at (2i+1)/(2 n_in) on the inner circle and j/n_out on the outer circle.
// Inner/Outer arcs are parallel to the counterclockwise boundary interval from a to b.
// A traversing arc joins inner a to the lift b + wind * n_out of outer b.
struct AnnulusArc {
  ArcKind kind = ArcKind::Traversing;
  int a = 0;
  int b = 0;
  Int wind = 0;
  friend bool operator==(const AnnulusArc&, const AnnulusArc&) = default;
  friend auto operator<=>(const AnnulusArc&, const AnnulusArc&) = default;
};

struct AnnulusArcSystem {
  int n_in = 0;
  int n_out = 0;
  std::vector<AnnulusArc> arcs;  // canonical order

  void canonicalize();
  int traversing_count() const;
  Rational inner_position(int i) const;
  Rational outer_position(int j) const;
  // Lifted outer minus inner position of a traversing arc.
  Rational displacement(const AnnulusArc& arc) const;
  friend bool operator==(const AnnulusArcSystem&, const AnnulusArcSystem&) = default;
  friend auto operator<=>(const AnnulusArcSystem&, const AnnulusArcSystem&) = default;
};

// Throws DomainError describing the first violation.
void verify_embedding(const AnnulusArcSystem& s);
bool is_embedded(const AnnulusArcSystem& s);

// window bounds the relative twisting of traversing arcs.
std::vector<AnnulusArcSystem> enumerate_annulus_systems(int n_in, int n_out, int window = 1);

enum class InvolutionKind { Identity, RotationHalf, Reflection, BoundarySwap, Custom };

// Affine action x -> sign * x + offset on each boundary circle, optionally exchanging them.
struct InvolutionOnMarks {
  InvolutionKind kind = InvolutionKind::Identity;
  int n_in = 0;
  int n_out = 0;
  bool swap = false;
  int sign_in = 1, sign_out = 1;
  Rational offset_in, offset_out;

  static InvolutionOnMarks make(InvolutionKind kind, int n_in, int n_out);
  // Marks 0..n_in-1 are inner, n_in..n_in+n_out-1 outer; throws if marks are not preserved.
  std::vector<int> permutation() const;
  bool is_involution() const;
};

std::string to_string(InvolutionKind k);
InvolutionKind parse_involution_kind(const std::string& text);

AnnulusArcSystem apply(const InvolutionOnMarks& inv, const AnnulusArcSystem& s);
std::vector<AnnulusArcSystem> filter_symmetric(const std::vector<AnnulusArcSystem>& systems,
                                               const InvolutionOnMarks& inv);

// Cut-open torus boundary. Face f runs from edge f (side 0) to edge f+1 (side 1), cyclically.
struct FaceArc {
  int from_side = 0;
  Rational from_x;
  int to_side = 1;
  Rational to_x;
  Rational dx;  // longitudinal displacement from the first endpoint to the second
};

struct Face {
  std::string name;
  std::vector<FaceArc> arcs;
};

Face linear_face(std::string name, const std::vector<Rational>& start_positions, const Rational& shift);

struct RoundedBoundarySpec {
  std::vector<Face> faces;
  int rounding = 1;  // +1 or -1: corner shift direction; 0: plain identification
};

struct ClosedCurve {
  Int meridian = 0;    // signed number of circuits through the faces
  Int longitude = 0;   // signed winding along the circle direction
  bool contractible = false;
};

enum class Verdict { Tight, Overtwisted };
std::string to_string(Verdict v);

struct RoundResult {
  std::vector<ClosedCurve> curves;
  Verdict verdict = Verdict::Tight;
  std::optional<Slope> slope;  // common slope when all curves are parallel and essential
  Int meridional_intersection = 0;
};

// Contractible means zero longitudinal winding: the meridian disk is spanned by the face loop.
RoundResult assemble_and_round(const RoundedBoundarySpec& spec);

enum class ProofName { NoBasic, VarDouble, C2TMinus1Minus2 };
std::string to_string(ProofName p);
ProofName parse_proof_name(const std::string& text);

struct ReplayCase {
  AnnulusArcSystem system;
  std::vector<Rational> displacements;
  std::optional<RoundResult> region;         // between A and its image
  std::optional<RoundResult> region_mirror;  // the complementary region
  std::string outcome;                       // overtwisted | excess twisting | tight
};

struct ProofReport {
  std::string name;
  std::string scenario;
  Slope inner_slope, outer_slope;
  int n_in = 0, n_out = 0;
  int rounding = 1;
  std::string window;
  std::size_t enumerated = 0;
  std::size_t symmetric = 0;
  std::size_t considered = 0;
  std::size_t overtwisted = 0;
  std::size_t excess_twisting = 0;
  std::size_t tight_survivors = 0;
  std::size_t classes_up_to_rotation = 0;
  int sign_decorations = 1;
  std::vector<ReplayCase> cases;
  std::vector<std::string> notes;
};

ProofReport replay_proof(ProofName name);

}  // namespace rt
