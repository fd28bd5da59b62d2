#include "rcsep/sorgenfrey.hpp"

#include "rcsep/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcsep::sorgenfrey {

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += coords[i].str();
  }
  return s + ")";
}

BaseBox pbox(const Point& x, long n) {
  if (n < 1) throw std::domain_error("pbox: n must be >= 1");
  if (x.dim() == 0) throw std::domain_error("pbox: zero-dimensional anchor");
  return BaseBox{x, n};
}

Box box(const Point& lower, const std::vector<Rational>& widths) {
  if (lower.dim() == 0) throw std::domain_error("box: zero-dimensional corner");
  if (widths.size() != lower.dim()) throw std::domain_error("box: width count mismatch");
  for (const auto& w : widths)
    if (w.sign() <= 0) throw std::domain_error("box: widths must be positive");
  return Box{lower, widths};
}

namespace {

struct CoordSpan {
  bool constrained = false;
  Rational lo;
  Rational hi;  // half-open [lo, hi)
};

CoordSpan span_of(const BaseBox& b, std::size_t k) {
  if (k >= b.constrained()) return {};
  Rational lo = b.anchor.coords[k];
  return {true, lo, lo + b.width()};
}

CoordSpan span_of(const Box& b, std::size_t k) {
  Rational lo = b.lower.coords[k];
  return {true, lo, lo + b.widths[k]};
}

template <typename A, typename B>
bool meets_impl(const A& a, const B& b) {
  if (a.dim() != b.dim()) throw std::domain_error("meets: dimension mismatch");
  for (std::size_t k = 0; k < a.dim(); ++k) {
    CoordSpan sa = span_of(a, k);
    CoordSpan sb = span_of(b, k);
    if (!sa.constrained || !sb.constrained) continue;
    if (!(sa.lo < sb.hi && sb.lo < sa.hi)) return false;
  }
  return true;
}

}  // namespace

bool contains(const BaseBox& b, const Point& q) {
  if (q.dim() != b.dim()) throw std::domain_error("contains: dimension mismatch");
  for (std::size_t k = 0; k < b.constrained(); ++k) {
    const Rational& lo = b.anchor.coords[k];
    if (q.coords[k] < lo || q.coords[k] >= lo + b.width()) return false;
  }
  return true;
}

bool contains(const Box& b, const Point& q) {
  if (q.dim() != b.dim()) throw std::domain_error("contains: dimension mismatch");
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Rational& lo = b.lower.coords[k];
    if (q.coords[k] < lo || q.coords[k] >= lo + b.widths[k]) return false;
  }
  return true;
}

bool meets(const BaseBox& a, const BaseBox& b) { return meets_impl(a, b); }
bool meets(const BaseBox& a, const Box& b) { return meets_impl(a, b); }
bool meets(const Box& a, const Box& b) { return meets_impl(a, b); }

bool point_in_union(const std::vector<Box>& gens, const Point& p) {
  for (const auto& g : gens)
    if (contains(g, p)) return true;
  return false;
}

void validate_sides(const std::vector<Box>& F, const std::vector<Box>& G) {
  if (F.empty() || G.empty()) throw ScenarioError("scenario: F and G must be nonempty");
  std::size_t d = F.front().dim();
  for (const auto& b : F)
    if (b.dim() != d) throw ScenarioError("scenario: mixed dimensions in F");
  for (const auto& b : G)
    if (b.dim() != d) throw ScenarioError("scenario: mixed dimensions in G");
  for (const auto& f : F)
    for (const auto& g : G)
      if (meets(f, g)) throw ScenarioError("scenario: F and G are not disjoint");
}

FilteredSet filtered_region(const std::vector<Box>& F, const std::vector<Box>& G, long n) {
  if (n < 1) throw std::domain_error("filtered_region: n must be >= 1");
  validate_sides(F, G);
  FilteredSet fs;
  fs.n = n;
  fs.dim = F.front().dim();
  fs.base = F;
  const std::size_t c = std::min<std::size_t>(fs.dim, (std::size_t)n);
  const Rational inv_n = Rational(1) / Rational(n);
  for (const auto& g : G) {
    ForbiddenBox fb;
    fb.lo.reserve(c);
    fb.hi.reserve(c);
    for (std::size_t k = 0; k < c; ++k) {
      fb.lo.push_back(g.lower.coords[k] - inv_n);
      fb.hi.push_back(g.lower.coords[k] + g.widths[k]);
    }
    fs.forbidden.push_back(std::move(fb));
  }
  return fs;
}

bool member(const FilteredSet& fs, const Point& x) {
  if (x.dim() != fs.dim) throw std::domain_error("member: dimension mismatch");
  if (!point_in_union(fs.base, x)) return false;
  for (const auto& fb : fs.forbidden) {
    bool escaped = false;
    for (std::size_t k = 0; k < fb.lo.size(); ++k)
      if (x.coords[k] <= fb.lo[k] || x.coords[k] >= fb.hi[k]) {
        escaped = true;
        break;
      }
    if (!escaped) return false;
  }
  return true;
}

bool member_direct_unchecked(const std::vector<Box>& F, const std::vector<Box>& G, long n,
                             const Point& x) {
  if (!point_in_union(F, x)) throw PreconditionError("member_direct: point not in F");
  BaseBox probe = pbox(x, n);
  for (const auto& g : G)
    if (meets(probe, g)) return false;
  return true;
}

bool member_direct(const std::vector<Box>& F, const std::vector<Box>& G, long n, const Point& x) {
  if (n < 1) throw std::domain_error("member_direct: n must be >= 1");
  validate_sides(F, G);
  return member_direct_unchecked(F, G, n, x);
}

std::optional<mpz_class> stage_index(const std::vector<Box>& G, const Point& x) {
  mpz_class best = 1;
  for (const auto& g : G) {
    if (g.dim() != x.dim()) throw std::domain_error("stage_index: dimension mismatch");
    std::optional<mpz_class> n_g;
    for (std::size_t k = 0; k < g.dim(); ++k) {
      const Rational& lo = g.lower.coords[k];
      const Rational hi = lo + g.widths[k];
      std::optional<mpz_class> n_k;
      // The escape coordinate must be constrained in P(x, n): n >= k+1.
      if (x.coords[k] >= hi) {
        n_k = mpz_class((unsigned long)(k + 1));
      } else if (x.coords[k] < lo) {
        // and the probe must stop short: 1/n <= lo - x_k
        n_k = ceil_int(Rational(1) / (lo - x.coords[k]));
        mpz_class need = mpz_class((unsigned long)(k + 1));
        if (*n_k < need) n_k = need;
      }
      if (n_k && (!n_g || *n_k < *n_g)) n_g = n_k;
    }
    if (!n_g) return std::nullopt;  // x inside this generator
    if (*n_g > best) best = *n_g;
  }
  return best;
}

ScaleCertificate separation_scale(const std::vector<Box>& F, const std::vector<Box>& G, long n,
                                  const Point& x) {
  if (n < 1) throw std::domain_error("separation_scale: n must be >= 1");
  validate_sides(F, G);
  if (!point_in_union(G, x)) throw PreconditionError("separation_scale: point not in G");

  const std::size_t d = x.dim();
  const BaseBox window = pbox(x, 2 * n);
  std::size_t host = G.size();
  for (std::size_t j = 0; j < G.size(); ++j)
    if (meets(window, G[j])) {
      host = j;
      break;
    }
  if (host == G.size())
    throw ScenarioError("separation_scale: no generator meets the probe window");
  const Box& g = G[host];

  const std::size_t c = window.constrained();  // min(2n, d)
  ScaleCertificate cert;
  cert.x = x;
  cert.host = host;
  cert.p.coords.resize(d);

  // Midpoints of the window/generator overlap on constrained coordinates;
  // generator anchor elsewhere.
  std::vector<Rational> slack(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational glo = g.lower.coords[k];
    Rational ghi = glo + g.widths[k];
    if (k < c) {
      Rational lo = max(x.coords[k], glo);
      Rational hi = min(x.coords[k] + window.width(), ghi);
      cert.p.coords[k] = (lo + hi) / Rational(2);
      slack[k] = hi - cert.p.coords[k];
    } else {
      cert.p.coords[k] = glo;
      slack[k] = g.widths[k];
    }
  }

  // Smallest i >= 2n with P(p, i) inside both the host generator and the window.
  mpz_class i_z(2 * n);
  for (std::size_t k = 0; k < d; ++k) {
    mpz_class need = least_n_at_least(Rational(1) / slack[k]);
    if (need > i_z) i_z = need;
  }
  cert.i = (long)i_z.get_si();

  Rational margin = cert.p.coords[0] - x.coords[0];
  for (std::size_t k = 1; k < c; ++k) margin = min(margin, cert.p.coords[k] - x.coords[k]);
  cert.m = (long)least_n_with_inverse_below(margin).get_si();

  if (!check_scale_certificate(cert, G, n))
    throw std::logic_error("separation_scale: constructed certificate failed its own checks");
  return cert;
}

bool check_scale_certificate(const ScaleCertificate& cert, const std::vector<Box>& G, long n) {
  if (cert.host >= G.size()) return false;
  if (cert.i < 2 * n || cert.m < 1) return false;
  const Box& g = G[cert.host];
  const std::size_t d = cert.x.dim();
  if (cert.p.dim() != d || g.dim() != d) return false;

  const std::size_t c = std::min<std::size_t>(d, (std::size_t)(2 * n));
  const Rational inv_i = Rational(1) / Rational(cert.i);
  const Rational inv_m = Rational(1) / Rational(cert.m);
  const Rational inv_2n = Rational(1) / Rational(2 * n);

  for (std::size_t k = 0; k < c; ++k) {
    if (!(cert.x.coords[k] < cert.p.coords[k])) return false;
    if (!(inv_m < cert.p.coords[k] - cert.x.coords[k])) return false;
    // P(p, i) inside the window on constrained coordinates
    if (!(cert.p.coords[k] + inv_i <= cert.x.coords[k] + inv_2n)) return false;
  }
  for (std::size_t k = 0; k < d; ++k) {
    // P(p, i) inside the host generator
    Rational glo = g.lower.coords[k];
    if (!(glo <= cert.p.coords[k])) return false;
    if (!(cert.p.coords[k] + inv_i <= glo + g.widths[k])) return false;
  }
  return true;
}

namespace {

struct Piece {
  Rational lo;
  Rational hi;
  bool point = false;  // singleton [lo, lo]
};

// Elementary pieces of one coordinate line relative to the breakpoints:
// singletons at breakpoints and open intervals between consecutive ones.
std::vector<Piece> elementary_pieces(std::vector<Rational> bps) {
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<Piece> out;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    out.push_back(Piece{bps[i], bps[i], true});
    if (i + 1 < bps.size()) out.push_back(Piece{bps[i], bps[i + 1], false});
  }
  return out;
}

struct CoordChoice {
  Piece piece;
  std::uint32_t kills = 0;
};

// Valid pieces at one coordinate for one base generator, with their kill sets.
std::vector<CoordChoice> coordinate_choices(const FilteredSet& fs, const Box& base,
                                            std::size_t k, const TargetBox& target,
                                            bool closure_mode) {
  const Rational flo = base.lower.coords[k];
  const Rational fhi = flo + base.widths[k];
  std::vector<Rational> bps{flo, fhi};
  for (const auto& fb : fs.forbidden)
    if (k < fb.lo.size()) {
      bps.push_back(fb.lo[k]);
      bps.push_back(fb.hi[k]);
    }
  const bool has_target = k < target.size() && target[k].has_value();
  if (has_target) {
    bps.push_back(target[k]->lo);
    bps.push_back(target[k]->hi);
  }

  std::vector<CoordChoice> out;
  for (const auto& pc : elementary_pieces(std::move(bps))) {
    // inside the half-open base interval (as a set, in both modes)
    if (pc.point) {
      if (pc.lo < flo || pc.lo >= fhi) continue;
    } else {
      if (pc.lo < flo || pc.hi > fhi) continue;
    }
    if (has_target) {
      const CoordInterval& t = *target[k];
      if (closure_mode) {
        // closure of the piece must meet the closed interval [lo, hi]
        if (pc.hi < t.lo || pc.lo > t.hi) continue;
      } else if (pc.point) {
        bool ok_lo = t.lo < pc.lo || (t.lo_closed && t.lo == pc.lo);
        bool ok_hi = pc.lo < t.hi || (t.hi_closed && pc.lo == t.hi);
        if (!ok_lo || !ok_hi) continue;
      } else {
        if (pc.lo < t.lo || pc.hi > t.hi) continue;
      }
    }
    CoordChoice ch{pc, 0};
    for (std::size_t j = 0; j < fs.forbidden.size(); ++j) {
      const auto& fb = fs.forbidden[j];
      if (k >= fb.lo.size()) continue;
      bool disjoint;
      if (pc.point)
        disjoint = pc.lo <= fb.lo[k] || pc.lo >= fb.hi[k];
      else
        disjoint = pc.hi <= fb.lo[k] || pc.lo >= fb.hi[k];
      if (disjoint) ch.kills |= (1u << j);
    }
    out.push_back(std::move(ch));
  }
  return out;
}

// DP over coordinates x kill masks for one base generator. Returns the
// chosen pieces on success.
bool base_feasible(const FilteredSet& fs, const Box& base, const TargetBox& target,
                   bool closure_mode, std::vector<Piece>* chosen) {
  const std::size_t d = fs.dim;
  const std::size_t nforb = fs.forbidden.size();
  if (nforb > 20) throw ScenarioError("too many generators for the feasibility engine");
  const std::uint32_t full = nforb == 0 ? 0 : ((1u << nforb) - 1);

  std::vector<std::vector<CoordChoice>> choices(d);
  for (std::size_t k = 0; k < d; ++k) {
    choices[k] = coordinate_choices(fs, base, k, target, closure_mode);
    if (choices[k].empty()) return false;
  }

  const std::size_t nmask = (std::size_t)full + 1;
  // reachable[k][mask]: can coordinates k..d-1 upgrade `mask` to full?
  std::vector<std::vector<char>> reach(d + 1, std::vector<char>(nmask, 0));
  for (std::size_t mask = 0; mask < nmask; ++mask) reach[d][mask] = (mask == full);
  for (std::size_t k = d; k-- > 0;)
    for (std::size_t mask = 0; mask < nmask; ++mask) {
      for (const auto& ch : choices[k])
        if (reach[k + 1][mask | ch.kills]) {
          reach[k][mask] = 1;
          break;
        }
    }
  if (!reach[0][0]) return false;

  if (chosen) {
    chosen->clear();
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& ch : choices[k])
        if (reach[k + 1][mask | ch.kills]) {
          chosen->push_back(ch.piece);
          mask |= ch.kills;
          break;
        }
  }
  return true;
}

Rational pick_in_piece(const Piece& p) {
  if (p.point) return p.lo;
  return (p.lo + p.hi) / Rational(2);
}

}  // namespace

std::optional<Point> feasible_point(const FilteredSet& fs, const TargetBox& target) {
  for (const auto& base : fs.base) {
    std::vector<Piece> chosen;
    if (!base_feasible(fs, base, target, /*closure_mode=*/false, &chosen)) continue;
    Point w;
    w.coords.reserve(fs.dim);
    for (const auto& pc : chosen) w.coords.push_back(pick_in_piece(pc));
    if (!member(fs, w)) throw std::logic_error("feasible_point: witness failed membership");
    return w;
  }
  return std::nullopt;
}

bool closure_meets(const FilteredSet& fs, const TargetBox& target) {
  for (const auto& base : fs.base)
    if (base_feasible(fs, base, target, /*closure_mode=*/true, nullptr)) return true;
  return false;
}

CoverReport cover_check(const Point& x, const std::vector<Point>& seq, long n,
                        const std::vector<Point>& samples) {
  if (n < 1) throw std::domain_error("cover_check: n must be >= 1");
  const std::size_t d = x.dim();
  for (const auto& s : seq)
    if (s.dim() != d) throw std::domain_error("cover_check: dimension mismatch in sequence");
  const std::size_t c = std::min<std::size_t>(d, (std::size_t)n);
  const Rational inv_n = Rational(1) / Rational(n);

  CoverReport rep;
  rep.witness.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.dim() != d) throw std::domain_error("cover_check: dimension mismatch in sample");
    for (std::size_t k = 0; k < c; ++k)
      if (!(x.coords[k] < s.coords[k] && s.coords[k] < x.coords[k] + inv_n))
        throw PreconditionError("cover_check: sample outside the open interior");
    long found = 0;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (contains(BaseBox{seq[j], n}, s)) {
        found = (long)j + 1;
        break;
      }
    }
    rep.witness.push_back(found);
    if (found == 0) ++rep.violations;
  }
  return rep;
}

}  // namespace rcsep::sorgenfrey
