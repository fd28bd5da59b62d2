#pragma once

#include "rcsep/niemytzki.hpp"
#include "rcsep/sorgenfrey.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rcsep::region {

enum class Space { niemytzki, sorgenfrey };

enum class VerdictKind { in, out, unknown };

enum class OutReason {
  none,
  predicate,        // an exact pointwise predicate failed
  cover_excluded,   // a subdivision cover certified emptiness
  side_exclusion,   // the query point lies in the opposite side's generators
  tail_bound,       // beyond the halo any deeper stage could reach
  empty_region,
};

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  long stage = 0;  // 1-based stage for staged unions
  std::string witness;
  OutReason reason = OutReason::none;
  int depth_used = 0;

  bool in() const { return kind == VerdictKind::in; }
  bool out() const { return kind == VerdictKind::out; }
  bool unknown() const { return kind == VerdictKind::unknown; }
  std::string str() const;
};

struct Node;
using Expr = std::shared_ptr<const Node>;

// ---- node payloads -----------------------------------------------------------

struct NOpenBallGen { niemytzki::Ball ball; };
struct NClosedBallGen { niemytzki::ClosedBall ball; };
struct SBaseBoxGen { sorgenfrey::BaseBox box; };
struct SBoxGen { sorgenfrey::Box box; };

// Union of basic balls of one radius anchored at every point of a filtered set.
struct NBallUnion {
  std::shared_ptr<const niemytzki::FilteredSet> fs;
  Rational radius;
};

// Union of base boxes P(x, param) anchored at every point of a filtered set.
struct SBoxUnion {
  std::shared_ptr<const sorgenfrey::FilteredSet> fs;
  long param = 1;
};

// Closed outer approximation of the closure of the matching union. Niemytzki:
// closed balls of the same radius over the closed relaxation of the off-axis
// part, lifted closed balls over the axis part, plus the axis part itself.
// Sorgenfrey: closed boxes over the Euclidean closure of the filtered set.
struct NClosureOuter {
  std::shared_ptr<const niemytzki::FilteredSet> fs;
  Rational radius;
};
struct SClosureOuter {
  std::shared_ptr<const sorgenfrey::FilteredSet> fs;
  long param = 1;
};

struct UnionNode { std::vector<Expr> parts; };

// Open set minus a closed outer approximation; open by construction.
struct DiffNode {
  Expr pos;
  Expr sub;
};

// Closure of the interior of a finite generator union, evaluated by an
// independent case analysis (not by the generators' own membership test).
struct NRegularClosure { std::vector<niemytzki::ClosedBall> gens; };
struct SRegularClosure { std::vector<sorgenfrey::Box> gens; };

struct EmptyNode {};

// Staged disjointified union with side metadata. Stage terms are the
// differences W_n minus the outer closures of V_1..V_n. Evaluation answers
// for the full (untruncated) union: points of the opposite side are excluded
// outright, points beyond the stage halo are certified out, and own-side
// points are never certified out.
struct StagedCover {
  Space space = Space::niemytzki;
  std::vector<Expr> stage_terms;
  Rational epsilon;  // niemytzki only
  std::vector<niemytzki::ClosedBall> own_n, other_n;
  std::vector<sorgenfrey::Box> own_s, other_s;
};

using NodeVariant =
    std::variant<NOpenBallGen, NClosedBallGen, SBaseBoxGen, SBoxGen, NBallUnion, SBoxUnion,
                 NClosureOuter, SClosureOuter, UnionNode, DiffNode, NRegularClosure,
                 SRegularClosure, EmptyNode, StagedCover>;

struct Node {
  NodeVariant v;
  explicit Node(NodeVariant nv) : v(std::move(nv)) {}
};

Expr make(NodeVariant v);

Expr generators_union(const std::vector<niemytzki::ClosedBall>& gens);
Expr generators_union(const std::vector<sorgenfrey::Box>& gens);

// ---- structural checks -------------------------------------------------------

// True when the expression uses only open generators, filtered unions,
// unions, and differences whose subtrahend is built from closure-outer
// nodes; i.e. the tree denotes an open set by construction.
bool open_by_construction(const Expr& e);

Space space_of(const Expr& e);

// ---- operations --------------------------------------------------------------

bool is_regular_closed_input(const std::vector<niemytzki::ClosedBall>& gens);
bool is_regular_closed_input(const std::vector<sorgenfrey::Box>& gens);

// Closure of the interior of a finite union of generators, as an expression
// provably equal to the union (clopen boxes; closed effective discs).
Expr regular_closure(const Expr& finite_union);

Expr build_wn(Space space, const std::vector<niemytzki::ClosedBall>& F,
              const std::vector<niemytzki::ClosedBall>& G, const Rational& epsilon, long n);
Expr build_wn(Space space, const std::vector<sorgenfrey::Box>& F,
              const std::vector<sorgenfrey::Box>& G, const Rational& epsilon, long n);

Expr closure_outer(const Expr& e);

struct SidePair {
  Expr uF;
  Expr uG;
};

SidePair engelking(const std::vector<Expr>& Ws, const std::vector<Expr>& Vs, long N);

struct SeparationResult {
  Expr uF;
  Expr uG;
  long stages = 0;
  Rational epsilon;
  std::vector<Expr> Ws;
  std::vector<Expr> Vs;
};

SeparationResult separate(const std::vector<niemytzki::ClosedBall>& F,
                          const std::vector<niemytzki::ClosedBall>& G, const Rational& epsilon,
                          long N);
SeparationResult separate(const std::vector<sorgenfrey::Box>& F,
                          const std::vector<sorgenfrey::Box>& G, long N);

// ---- certified membership ----------------------------------------------------

Verdict member(const Expr& e, const niemytzki::Point& q, int budget);
Verdict member(const Expr& e, const sorgenfrey::Point& q, int budget);

}  // namespace rcsep::region
