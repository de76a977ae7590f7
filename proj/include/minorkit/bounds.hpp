#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

// Exact evaluation of the explicit bound functions behind the obstruction-size
// machinery: wall extraction heights, folio and representative censuses, the
// apex-forcing grid sizes, and the treewidth/size compositions built from them.
//
// Every asymptotic factor is a named integer constant (default 1) so that a
// result is a reproducible number, not a shape. All arithmetic is arbitrary
// precision; there is no floating point anywhere in this module. Values whose
// bit length would exceed the configured budget raise resource_limit_error
// instead of exhausting memory, since several catalog entries are towers.

namespace minorkit {

using bigint = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// named constants

class BoundConstants {
public:
    // name -> one-line description of what the constant multiplies
    static const std::map<std::string, std::string>& descriptions() {
        static const std::map<std::string, std::string> d = {
            {"c_detail", "multiplier on s^2 bounding the largest detail of an excluded graph"},
            {"c_flatwall", "multiplier on t^2 in the wall height that yields a flat wall"},
            {"c_folio", "multiplier on (t+l)*log2(t+l) inside the folio census double exponential"},
            {"c_grid_universal", "multiplier on n in the grid side hosting every n-vertex planar graph"},
            {"c_homogeneous", "multiplier on r^var_count when extracting a homogeneous subwall"},
            {"c_irrelevant", "multiplier on f_ul(16a+12l)^3 in the irrelevant-compass height"},
            {"c_rep_tower", "multiplier on h*log2(h) in the innermost level of the representative census tower"},
            {"c_var", "multiplier on (atilde+l)*log2(atilde+l) in the augmented-flap color census"},
            {"c_wall_ratio", "multiplier on t^2*log2(t) in the exponent of the treewidth-to-wall ratio"},
        };
        return d;
    }

    long long get(const std::string& name) const {
        require_known(name);
        auto it = values_.find(name);
        return it == values_.end() ? 1 : it->second;
    }

    void set(const std::string& name, long long value) {
        require_known(name);
        if (value < 0) throw std::invalid_argument("bounds: constant '" + name + "' must be nonnegative");
        values_[name] = value;
    }

    // full snapshot, defaults included
    std::map<std::string, long long> snapshot() const {
        std::map<std::string, long long> out;
        for (const auto& [name, desc] : descriptions()) {
            (void)desc;
            out[name] = get(name);
        }
        return out;
    }

private:
    static void require_known(const std::string& name) {
        if (descriptions().count(name) == 0)
            throw std::invalid_argument("bounds: unknown constant '" + name + "'");
    }

    std::map<std::string, long long> values_;
};

// ---------------------------------------------------------------------------
// parameters

using FulFunction = std::function<bigint(const bigint&)>;

inline FulFunction ful_identity() {
    return [](const bigint& x) { return x; };
}
inline FulFunction ful_zero() {
    return [](const bigint&) { return bigint(0); };
}
// scale*x + offset; monotone for nonnegative coefficients
inline FulFunction ful_affine(long long scale, long long offset) {
    if (scale < 0 || offset < 0)
        throw std::invalid_argument("bounds: affine f_ul needs nonnegative coefficients");
    return [scale, offset](const bigint& x) { return bigint(scale) * x + offset; };
}

struct BoundParams {
    // Catalog arguments. Only the fields an entry reads need to be set;
    // a missing required field raises std::invalid_argument.
    std::optional<long long> a, s, k, t, tw, l, q, r, z, x, p, d, y, atilde;

    // Plug-in for the unique-linkage growth function. The catalog entries built
    // on the representative census refuse to run without an explicit choice;
    // the irrelevant-height family falls back to the identity and records a
    // warning in the result instead.
    FulFunction f_ul;

    BoundConstants constants;

    // Bit-length budget for any intermediate value.
    long long max_bits = 1 << 22;
};

// ---------------------------------------------------------------------------
// results

struct BoundTrace {
    std::string name;   // catalog id, or a short intermediate label
    std::string note;   // formula fragment this node evaluates
    bigint value;
    std::vector<BoundTrace> children;
};

struct BoundResult {
    bigint value;
    BoundTrace trace;
    std::map<std::string, long long> constants;  // snapshot at evaluation time
    std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// integer helpers

namespace detail_bounds {

// floor(log2(x)) for x >= 1
inline bigint flog2(const bigint& x) {
    if (x <= 0) throw std::invalid_argument("bounds: flog2 of nonpositive value");
    return bigint(boost::multiprecision::msb(x));
}

// ceil(log2(x)) for x >= 1
inline bigint clog2(const bigint& x) {
    if (x <= 0) throw std::invalid_argument("bounds: clog2 of nonpositive value");
    if (x == 1) return 0;
    std::size_t m = boost::multiprecision::msb(x);
    bigint pow = bigint(1) << m;
    return bigint(m) + (pow == x ? 0 : 1);
}

// the integer reading of n*log(n); 0 for n <= 1
inline bigint nlogn(const bigint& n) {
    if (n <= 1) return 0;
    return n * clog2(n);
}

// smallest odd integer >= x
inline bigint odd_up(const bigint& x) {
    if (x <= 1) return 1;
    return (x % 2 == 1) ? x : x + 1;
}

// ceil(sqrt(v))
inline bigint isqrt_ceil(const bigint& v) {
    if (v < 0) throw std::invalid_argument("bounds: isqrt_ceil of negative value");
    bigint root = boost::multiprecision::sqrt(v);
    if (root * root < v) ++root;
    return root;
}

// 2^e under the bit budget
inline bigint pow2(const bigint& e, long long max_bits) {
    if (e < 0) throw std::invalid_argument("bounds: negative exponent");
    if (e > max_bits)
        throw resource_limit_error("bounds: 2^" + e.str() + " exceeds the bit budget of " +
                                   std::to_string(max_bits) + " bits");
    return bigint(1) << static_cast<unsigned long long>(e);
}

// base^e under the bit budget
inline bigint ipow(const bigint& base, const bigint& e, long long max_bits) {
    if (e < 0) throw std::invalid_argument("bounds: negative exponent");
    if (base < 0) throw std::invalid_argument("bounds: negative base");
    if (base == 0) return e == 0 ? bigint(1) : bigint(0);
    if (base == 1) return 1;
    bigint bits_needed = (flog2(base) + 1) * e;
    if (bits_needed > max_bits)
        throw resource_limit_error("bounds: " + base.str() + "^" + e.str() +
                                   " exceeds the bit budget of " + std::to_string(max_bits) + " bits");
    bigint result = 1, b = base, exp = e;
    while (exp > 0) {
        if (exp % 2 == 1) result *= b;
        exp /= 2;
        if (exp > 0) b *= b;
    }
    return result;
}

// Resolved evaluation environment threaded through the catalog.
struct Env {
    const BoundConstants* consts;
    const FulFunction* ful;
    long long max_bits;
    std::vector<std::string>* warnings;

    long long c(const std::string& name) const { return consts->get(name); }

    bigint ful_required(const bigint& v, const char* who) const {
        if (!*ful)
            throw configuration_error(std::string("bounds: ") + who +
                                      " requires an explicit f_ul plug-in; refusing a silent default");
        return (*ful)(v);
    }

    bigint ful_or_identity(const bigint& v, const char* who) const {
        if (!*ful) {
            if (warnings)
                warnings->push_back(std::string(who) +
                                    ": no f_ul plug-in was provided; using the identity");
            return v;
        }
        return (*ful)(v);
    }
};

inline void check_nonneg(const bigint& v, const char* entry, const char* arg) {
    if (v < 0)
        throw std::invalid_argument(std::string("bounds: ") + entry + ": parameter '" + arg +
                                    "' must be nonnegative");
}

inline void check_odd_ge3(const bigint& v, const char* entry, const char* arg) {
    if (v < 3 || v % 2 == 0)
        throw std::invalid_argument(std::string("bounds: ") + entry + ": parameter '" + arg +
                                    "' must be an odd integer >= 3");
}

// ---------------------------------------------------------------------------
// catalog core (explicit arguments, bigint throughout)

// smallest odd >= c_flatwall * t^2: wall height factor that guarantees a flat
// wall of the requested height after deleting apex_count(t) vertices
inline BoundTrace flatwall_factor(const Env& e, const bigint& t) {
    check_nonneg(t, "flatwall_factor", "t");
    if (t < 1) throw std::invalid_argument("bounds: flatwall_factor: t must be >= 1");
    bigint v = odd_up(bigint(e.c("c_flatwall")) * t * t);
    return {"flatwall_factor", "odd_up(c_flatwall * t^2)", v, {}};
}

// t - 5: how many apices must be deleted to flatten a wall when K_t is excluded
inline BoundTrace apex_count(const Env&, const bigint& t) {
    if (t < 5) throw std::invalid_argument("bounds: apex_count: t must be >= 5");
    return {"apex_count", "t - 5", t - 5, {}};
}

// 2^2^(c_folio*(t+l)*log2(t+l)): census of distinct l-folios of t-boundaried graphs
inline BoundTrace folio_count(const Env& e, const bigint& t, const bigint& l) {
    check_nonneg(t, "folio_count", "t");
    check_nonneg(l, "folio_count", "l");
    bigint inner = bigint(e.c("c_folio")) * nlogn(t + l);
    bigint v = pow2(pow2(inner, e.max_bits), e.max_bits);
    return {"folio_count", "2^2^(c_folio * (t+l) * log2(t+l))", v, {}};
}

// 2^(a^atilde * 2^(c_var*(atilde+l)*log2(atilde+l))): census of augmented-flap colors
inline BoundTrace var_count(const Env& e, const bigint& a, const bigint& atilde, const bigint& l) {
    check_nonneg(a, "var_count", "a");
    check_nonneg(atilde, "var_count", "atilde");
    check_nonneg(l, "var_count", "l");
    if (atilde > a) throw std::invalid_argument("bounds: var_count: needs atilde <= a");
    bigint inner = pow2(bigint(e.c("c_var")) * nlogn(atilde + l), e.max_bits);
    // a^0 = 1 also for a = 0: the empty apex choice is one choice
    bigint choices = (atilde == 0) ? bigint(1) : ipow(a, atilde, e.max_bits);
    bigint v = pow2(choices * inner, e.max_bits);
    return {"var_count", "2^(a^atilde * 2^(c_var * (atilde+l) * log2(atilde+l)))", v, {}};
}

// smallest odd >= c_homogeneous * r^var_count(a, atilde, l): height that forces a
// homogeneous r-subwall
inline BoundTrace homogeneous_height(const Env& e, const bigint& r, const bigint& a,
                                     const bigint& atilde, const bigint& l) {
    check_odd_ge3(r, "homogeneous_height", "r");
    BoundTrace vc = var_count(e, a, atilde, l);
    bigint v = odd_up(bigint(e.c("c_homogeneous")) * ipow(r, vc.value, e.max_bits));
    return {"homogeneous_height", "odd_up(c_homogeneous * r^var_count)", v, {std::move(vc)}};
}

// smallest odd >= c_irrelevant * f_ul(16a+12l)^3 + q: homogeneous-wall height whose
// central compass is l-irrelevant. Falls back to identity f_ul with a warning.
inline BoundTrace irrelevant_height(const Env& e, const bigint& a, const bigint& l, const bigint& q) {
    check_nonneg(a, "irrelevant_height", "a");
    check_nonneg(l, "irrelevant_height", "l");
    check_odd_ge3(q, "irrelevant_height", "q");
    bigint arg = 16 * a + 12 * l;
    bigint u = e.ful_or_identity(arg, "irrelevant_height");
    BoundTrace uf = {"f_ul", "f_ul(16a + 12l), argument " + arg.str(), u, {}};
    bigint v = odd_up(bigint(e.c("c_irrelevant")) * u * u * u + q);
    return {"irrelevant_height", "odd_up(c_irrelevant * f_ul(16a+12l)^3 + q)", v, {std::move(uf)}};
}

// a + l + 3: homogeneity depth needed by the irrelevant-height guarantee
inline BoundTrace homogeneity_d(const Env&, const bigint& a, const bigint& l) {
    check_nonneg(a, "homogeneity_d", "a");
    check_nonneg(l, "homogeneity_d", "l");
    return {"homogeneity_d", "a + l + 3", a + l + 3, {}};
}

// smallest odd >= (k+1)*(irrelevant_height+2) + q: height at which deleting the
// central compass is safe against every k-sized deletion set
inline BoundTrace acquaintance_height(const Env& e, const bigint& a, const bigint& l,
                                      const bigint& q, const bigint& k) {
    check_nonneg(k, "acquaintance_height", "k");
    BoundTrace zt = irrelevant_height(e, a, l, q);
    bigint v = odd_up((k + 1) * (zt.value + 2) + q);
    return {"acquaintance_height", "odd_up((k+1) * (irrelevant_height + 2) + q)", v, {std::move(zt)}};
}

// odd_up(ceil(sqrt(z)*(x+2))) + 2(p+1): wall height packing z disjoint x-subwalls
// whose influences stay p-internal and bag-disjoint
inline BoundTrace packing_height(const Env&, const bigint& z, const bigint& x, const bigint& p) {
    if (z < 1) throw std::invalid_argument("bounds: packing_height: z must be >= 1");
    if (p < 1) throw std::invalid_argument("bounds: packing_height: p must be >= 1");
    check_odd_ge3(x, "packing_height", "x");
    // ceil(sqrt(z)*(x+2)) == ceil(sqrt(z*(x+2)^2))
    bigint core = odd_up(isqrt_ceil(z * (x + 2) * (x + 2)));
    bigint v = core + 2 * (p + 1);
    return {"packing_height", "odd_up(ceil(sqrt(z)*(x+2))) + 2*(p+1)", v, {}};
}

// r^2*a + (a-1)*d: path length carrying a pairwise-d-scattered color classes of
// r^2 vertices each. Requires d >= 2r^2, the slack the contraction argument uses.
inline BoundTrace scattered_n(const Env&, const bigint& r, const bigint& a, const bigint& d) {
    if (r < 1) throw std::invalid_argument("bounds: scattered_n: r must be >= 1");
    if (a < 1) throw std::invalid_argument("bounds: scattered_n: a must be >= 1");
    if (d < 2 * r * r)
        throw std::invalid_argument("bounds: scattered_n: needs d >= 2*r^2");
    return {"scattered_n", "r^2 * a + (a-1) * d", r * r * a + (a - 1) * d, {}};
}

// 2(r^2+r+1)+1: rows needed around the middle path for the comb-and-spike trees
inline BoundTrace scattered_m(const Env&, const bigint& r) {
    check_nonneg(r, "scattered_m", "r");
    return {"scattered_m", "2*(r^2 + r + 1) + 1", 2 * (r * r + r + 1) + 1, {}};
}

// scattered_m(r)*(a+1) + 2: stride that leaves a scattered_m(r)-wide block of
// vertical (or horizontal) paths avoiding every favored residue class
inline BoundTrace panchromatic_b(const Env& e, const bigint& r, const bigint& a) {
    if (r < 1) throw std::invalid_argument("bounds: panchromatic_b: r must be >= 1");
    if (a < 1) throw std::invalid_argument("bounds: panchromatic_b: a must be >= 1");
    BoundTrace sm = scattered_m(e, r);
    bigint v = sm.value * (a + 1) + 2;
    return {"panchromatic_b", "scattered_m(r) * (a+1) + 2", v, {std::move(sm)}};
}

// ceil(sqrt(scattered_n(r, a, scattered_m(r)))): residue classes per direction
inline BoundTrace panchromatic_z(const Env& e, const bigint& r, const bigint& a) {
    if (r < 1) throw std::invalid_argument("bounds: panchromatic_z: r must be >= 1");
    if (a < 1) throw std::invalid_argument("bounds: panchromatic_z: a must be >= 1");
    BoundTrace sm = scattered_m(e, r);
    BoundTrace sn = scattered_n(e, r, a, sm.value);
    bigint v = isqrt_ceil(sn.value);
    return {"panchromatic_z", "ceil(sqrt(scattered_n(r, a, scattered_m(r))))", v,
            {std::move(sm), std::move(sn)}};
}

// panchromatic_b * panchromatic_z: side of the central grid that must carry the
// color classes for the panchromatic contraction
inline BoundTrace panchromatic_center(const Env& e, const bigint& r, const bigint& a) {
    BoundTrace bt = panchromatic_b(e, r, a);
    BoundTrace zt = panchromatic_z(e, r, a);
    bigint v = bt.value * zt.value;
    return {"panchromatic_center", "panchromatic_b * panchromatic_z", v, {std::move(bt), std::move(zt)}};
}

// 2^(a-1) * r^2 * panchromatic_b^2: how often each color must appear in the center
inline BoundTrace panchromatic_support(const Env& e, const bigint& r, const bigint& a) {
    if (a < 1) throw std::invalid_argument("bounds: panchromatic_support: a must be >= 1");
    BoundTrace bt = panchromatic_b(e, r, a);
    bigint v = pow2(a - 1, e.max_bits) * r * r * bt.value * bt.value;
    return {"panchromatic_support", "2^(a-1) * r^2 * panchromatic_b^2", v, {std::move(bt)}};
}

// scattered_m(r): layers around the center the contraction consumes
inline BoundTrace panchromatic_margin(const Env& e, const bigint& r) {
    BoundTrace sm = scattered_m(e, r);
    bigint v = sm.value;
    return {"panchromatic_margin", "scattered_m(r)", v, {std::move(sm)}};
}

// c_grid_universal * n: side of a grid containing every n-vertex planar graph as a minor
inline BoundTrace grid_universal(const Env& e, const bigint& n) {
    check_nonneg(n, "grid_universal", "n");
    return {"grid_universal", "c_grid_universal * n", bigint(e.c("c_grid_universal")) * n, {}};
}

inline void check_forcing_args(const bigint& a, const bigint& s, const bigint& k, const char* entry) {
    if (a < 1) throw std::invalid_argument(std::string("bounds: ") + entry + ": a must be >= 1");
    check_nonneg(k, entry, "k");
    if (s <= a) throw std::invalid_argument(std::string("bounds: ") + entry + ": needs s > a");
}

// ceil(sqrt((k+a^2+1) * grid_universal(s-a))): grid side whose complete-apex version
// pins every k-sized deletion set to the apex set.
// Not monotone in a: the grid_universal(s-a) factor shrinks as a grows and can
// overtake the (k+a^2+1) gain, e.g. (a,s,k) = (15,20,0) -> 1130 vs (16,20,0) -> 1028
// before the square root.
inline BoundTrace forcing_r(const Env& e, const bigint& a, const bigint& s, const bigint& k) {
    check_forcing_args(a, s, k, "forcing_r");
    BoundTrace gu = grid_universal(e, s - a);
    bigint v = isqrt_ceil((k + a * a + 1) * gu.value);
    return {"forcing_r", "ceil(sqrt((k + a^2 + 1) * grid_universal(s-a)))", v, {std::move(gu)}};
}

// panchromatic_center(forcing_r, a) + 2*panchromatic_margin(forcing_r) + 2:
// flat-wall height at which apex adjacency forces deletion sets into the apices
inline BoundTrace forcing_height(const Env& e, const bigint& a, const bigint& s, const bigint& k) {
    check_forcing_args(a, s, k, "forcing_height");
    BoundTrace rt = forcing_r(e, a, s, k);
    BoundTrace ct = panchromatic_center(e, rt.value, a);
    BoundTrace mt = panchromatic_margin(e, rt.value);
    bigint v = ct.value + 2 * mt.value + 2;
    return {"forcing_height", "panchromatic_center + 2*panchromatic_margin + 2", v,
            {std::move(rt), std::move(ct), std::move(mt)}};
}

// panchromatic_support(forcing_r, a): internal-bag adjacencies each apex needs
inline BoundTrace forcing_degree(const Env& e, const bigint& a, const bigint& s, const bigint& k) {
    check_forcing_args(a, s, k, "forcing_degree");
    BoundTrace rt = forcing_r(e, a, s, k);
    BoundTrace st = panchromatic_support(e, rt.value, a);
    bigint v = st.value;
    return {"forcing_degree", "panchromatic_support(forcing_r, a)", v, {std::move(rt), std::move(st)}};
}

// panchromatic_margin(forcing_r): how internal those bags must be
inline BoundTrace forcing_depth(const Env& e, const bigint& a, const bigint& s, const bigint& k) {
    check_forcing_args(a, s, k, "forcing_depth");
    BoundTrace rt = forcing_r(e, a, s, k);
    BoundTrace mt = panchromatic_margin(e, rt.value);
    bigint v = mt.value;
    return {"forcing_depth", "panchromatic_margin(forcing_r)", v, {std::move(rt), std::move(mt)}};
}

// 2^(c_wall_ratio * t^2 * log2(t)): treewidth-to-wall ratio under a K_t exclusion
inline BoundTrace wall_ratio(const Env& e, const bigint& t) {
    if (t < 1) throw std::invalid_argument("bounds: wall_ratio: t must be >= 1");
    bigint exponent = bigint(e.c("c_wall_ratio")) * t * t * clog2(t);
    return {"wall_ratio", "2^(c_wall_ratio * t^2 * log2(t))", pow2(exponent, e.max_bits), {}};
}

// Treewidth bound for an obstruction of the k-apex class over graphs of size <= s
// with apex number a. The derived detail bound is l = c_detail * s^2.
// Monotone in s and k; inherits forcing_r's non-monotonicity in a.
inline BoundTrace tw_bound(const Env& e, const bigint& a, const bigint& s, const bigint& k) {
    if (a < 1) throw std::invalid_argument("bounds: tw_bound: a must be >= 1");
    if (s < 5) throw std::invalid_argument("bounds: tw_bound: s must be >= 5");
    check_nonneg(k, "tw_bound", "k");
    // an apex set of a graph on s vertices never needs more than s-4 vertices:
    // every 4-vertex remainder is planar
    if (a > s - 4) throw std::invalid_argument("bounds: tw_bound: needs a <= s - 4");

    bigint atilde = a - 1;
    bigint l = bigint(e.c("c_detail")) * s * s;

    BoundTrace bt = acquaintance_height(e, atilde, l, 3, k);
    BoundTrace apex = apex_count(e, s);
    BoundTrace dt = homogeneity_d(e, apex.value, l);
    bigint z = apex.value + k + 1;
    BoundTrace mt = forcing_height(e, a, s, k + 1);
    BoundTrace xt = forcing_degree(e, a, s, k + 1);
    bigint lprod = z * xt.value;
    BoundTrace pt = forcing_depth(e, a, s, k + 1);
    BoundTrace ht = packing_height(e, lprod + 1, bt.value, pt.value);
    bigint r = odd_up(std::max(mt.value, ht.value));
    BoundTrace wt = homogeneous_height(e, r, z, atilde, dt.value);
    BoundTrace ft = flatwall_factor(e, s);
    bigint q = ft.value * wt.value;
    BoundTrace rt = wall_ratio(e, s);
    bigint v = rt.value * q + k + 1;

    std::vector<BoundTrace> steps;
    steps.push_back({"b", "acquaintance_height(a-1, l, 3, k)", bt.value, {std::move(bt)}});
    steps.push_back({"d", "homogeneity_d(apex_count(s), l)", dt.value, {std::move(apex), std::move(dt)}});
    steps.push_back({"z", "apex_count(s) + k + 1", z, {}});
    steps.push_back({"m", "forcing_height(a, s, k+1)", mt.value, {std::move(mt)}});
    steps.push_back({"x", "forcing_degree(a, s, k+1)", xt.value, {std::move(xt)}});
    steps.push_back({"l", "z * x", lprod, {}});
    steps.push_back({"p", "forcing_depth(a, s, k+1)", pt.value, {std::move(pt)}});
    steps.push_back({"h", "packing_height(l+1, b, p)", ht.value, {std::move(ht)}});
    steps.push_back({"r", "odd_up(max(m, h))", r, {}});
    steps.push_back({"w", "homogeneous_height(r, z, a-1, d)", wt.value, {std::move(wt)}});
    steps.push_back({"q", "flatwall_factor(s) * w", q, {std::move(ft)}});
    steps.push_back({"wall_ratio", "wall_ratio(s)", rt.value, {std::move(rt)}});
    return {"tw_bound", "wall_ratio(s) * q + k + 1", v, std::move(steps)};
}

// tower 2^2^2^(f_ul(h)^(2^2^(c_rep_tower * h * log2(h)))): per-boundary-size factor
// of the representative census
inline BoundTrace rep_tower(const Env& e, const bigint& h) {
    check_nonneg(h, "rep_tower", "h");
    bigint c = e.ful_required(h, "rep_tower");
    bigint x0 = bigint(e.c("c_rep_tower")) * nlogn(h);
    bigint t1 = pow2(x0, e.max_bits);
    bigint t2 = pow2(t1, e.max_bits);
    bigint t3 = ipow(c, t2, e.max_bits);
    bigint t4 = pow2(t3, e.max_bits);
    bigint t5 = pow2(t4, e.max_bits);
    bigint v = pow2(t5, e.max_bits);
    return {"rep_tower", "2^2^2^(f_ul(h)^(2^2^(c_rep_tower * h * log2(h))))", v, {}};
}

// 2^(rep_tower(h) * t * log2(t)): count of minor-equivalence representatives of
// t-boundaried graphs at detail h
inline BoundTrace rep_count(const Env& e, const bigint& t, const bigint& h) {
    check_nonneg(t, "rep_count", "t");
    BoundTrace tower = rep_tower(e, h);
    bigint v = pow2(tower.value * nlogn(t), e.max_bits);
    return {"rep_count", "2^(rep_tower(h) * t * log2(t))", v, {std::move(tower)}};
}

// sum over boundary subsets I of rep_count(t-|I|, h): size of the index set the
// characteristic function is defined on
inline BoundTrace char_domain(const Env& e, const bigint& t, const bigint& h) {
    check_nonneg(t, "char_domain", "t");
    if (t > 65536)
        throw resource_limit_error("bounds: char_domain: t = " + t.str() +
                                   " exceeds the iteration budget");
    BoundTrace tower = rep_tower(e, h);
    bigint total = 0;
    bigint coeff = 1;  // C(t, i), updated incrementally
    for (bigint i = 0; i <= t; ++i) {
        bigint reps = pow2(tower.value * nlogn(t - i), e.max_bits);
        total += coeff * reps;
        if (i < t) {
            coeff *= t - i;
            coeff /= i + 1;
        }
    }
    return {"char_domain", "sum_i C(t,i) * rep_count(t-i, h)", total, {std::move(tower)}};
}

// (k+2)*y + 1 where y = |char domain|: chain length that forces two equal
// characteristics. y may be supplied directly instead of (t, h).
inline BoundTrace repeat_length(const Env& e, const bigint& k, const bigint& t, const bigint& h) {
    check_nonneg(k, "repeat_length", "k");
    BoundTrace yt = char_domain(e, t, h);
    bigint v = (k + 2) * yt.value + 1;
    return {"repeat_length", "(k+2) * char_domain(t, h) + 1", v, {std::move(yt)}};
}

inline BoundTrace repeat_length_y(const Env&, const bigint& k, const bigint& y) {
    check_nonneg(k, "repeat_length", "k");
    if (y < 1) throw std::invalid_argument("bounds: repeat_length: y must be >= 1");
    BoundTrace yt = {"y", "explicit char-domain size", y, {}};
    bigint v = (k + 2) * y + 1;
    return {"repeat_length", "(k+2) * y + 1", v, {std::move(yt)}};
}

// t * 2^(m^t) with t = tw+1, m = (2^C(t,2)+1) * repeat_length(k, t, l): size bound
// for an obstruction of treewidth tw once no characteristic repeat is available
inline BoundTrace size_bound(const Env& e, const bigint& tw, const bigint& l, const bigint& k) {
    check_nonneg(tw, "size_bound", "tw");
    check_nonneg(l, "size_bound", "l");
    check_nonneg(k, "size_bound", "k");
    bigint t = tw + 1;
    BoundTrace dt = repeat_length(e, k, t, l);
    bigint m = (pow2(t * (t - 1) / 2, e.max_bits) + 1) * dt.value;
    bigint x = ipow(m, t, e.max_bits);
    bigint v = t * pow2(x, e.max_bits);
    std::vector<BoundTrace> steps;
    steps.push_back({"t", "tw + 1", t, {}});
    steps.push_back({"d", "repeat_length(k, t, l)", dt.value, {std::move(dt)}});
    steps.push_back({"m", "(2^C(t,2) + 1) * d", m, {}});
    steps.push_back({"x", "m^t", x, {}});
    return {"size_bound", "t * 2^x", v, std::move(steps)};
}

// size_bound(tw_bound(a, s, k), c_detail * s^2, k): vertex-count bound for every
// obstruction of the k-apex class
inline BoundTrace obstruction_size(const Env& e, const bigint& a, const bigint& s, const bigint& k) {
    BoundTrace twt = tw_bound(e, a, s, k);
    bigint l = bigint(e.c("c_detail")) * s * s;
    BoundTrace st = size_bound(e, twt.value, l, k);
    bigint v = st.value;
    return {"obstruction_size", "size_bound(tw_bound(a,s,k), c_detail * s^2, k)", v,
            {std::move(twt), std::move(st)}};
}

// Exact upper bound on log2(log2(obstruction_size)), computed without ever
// materializing the doubly exponential value. Used to check the stated growth
// shape (polynomial in k for a = 1) where the exact value cannot exist in memory.
//   size = t * 2^(m^t) so log2 log2 size <= log2(m^t * 2) = t*log2(m) + 1,
//   and log2(m) <= C(t,2) + log2(d) + 2.
inline bigint obstruction_size_loglog2_upper(const Env& e, const bigint& a, const bigint& s,
                                             const bigint& k) {
    BoundTrace twt = tw_bound(e, a, s, k);
    bigint l = bigint(e.c("c_detail")) * s * s;
    bigint t = twt.value + 1;
    // log2(y) <= t + rep_tower(l)*t*log2(t): each of the <= 2^t summands is at
    // most the largest rep_count
    BoundTrace tower = rep_tower(e, l);
    bigint log_y = t + tower.value * nlogn(t);
    bigint log_d = clog2(k + 2) + log_y + 1;
    bigint log_m = t * (t - 1) / 2 + log_d + 2;
    return t * log_m + 1;
}

}  // namespace detail_bounds

// ---------------------------------------------------------------------------
// public dispatch

inline const std::vector<std::string>& bound_catalog() {
    static const std::vector<std::string> names = {
        "flatwall_factor", "apex_count", "folio_count", "var_count", "homogeneous_height",
        "irrelevant_height", "homogeneity_d", "acquaintance_height", "packing_height",
        "scattered_n", "scattered_m", "panchromatic_b", "panchromatic_z", "panchromatic_center",
        "panchromatic_support", "panchromatic_margin", "grid_universal", "forcing_r",
        "forcing_height", "forcing_degree", "forcing_depth", "wall_ratio", "tw_bound",
        "rep_count", "char_domain", "repeat_length", "size_bound", "obstruction_size"};
    return names;
}

inline BoundResult explain(const std::string& name, const BoundParams& p) {
    BoundResult out;
    out.constants = p.constants.snapshot();
    detail_bounds::Env env{&p.constants, &p.f_ul, p.max_bits, &out.warnings};

    auto need = [&](const std::optional<long long>& field, const char* flag) -> bigint {
        if (!field)
            throw std::invalid_argument("bounds: '" + name + "' requires parameter '" + flag + "'");
        if (*field < 0)
            throw std::invalid_argument("bounds: parameter '" + std::string(flag) +
                                        "' must be nonnegative");
        return bigint(*field);
    };

    // derived-detail sanity: an explicitly supplied detail bound must respect
    // the quadratic cap used by the compositions
    if (p.l && p.s) {
        bigint cap = bigint(p.constants.get("c_detail")) * (*p.s) * (*p.s);
        if (bigint(*p.l) > cap)
            throw std::invalid_argument("bounds: detail parameter 'l' exceeds c_detail * s^2");
    }

    namespace db = detail_bounds;
    if (name == "flatwall_factor") out.trace = db::flatwall_factor(env, need(p.t, "t"));
    else if (name == "apex_count") out.trace = db::apex_count(env, need(p.t, "t"));
    else if (name == "folio_count") out.trace = db::folio_count(env, need(p.t, "t"), need(p.l, "l"));
    else if (name == "var_count")
        out.trace = db::var_count(env, need(p.a, "a"), need(p.atilde, "atilde"), need(p.l, "l"));
    else if (name == "homogeneous_height")
        out.trace = db::homogeneous_height(env, need(p.r, "r"), need(p.a, "a"),
                                           need(p.atilde, "atilde"), need(p.l, "l"));
    else if (name == "irrelevant_height")
        out.trace = db::irrelevant_height(env, need(p.a, "a"), need(p.l, "l"), need(p.q, "q"));
    else if (name == "homogeneity_d") out.trace = db::homogeneity_d(env, need(p.a, "a"), need(p.l, "l"));
    else if (name == "acquaintance_height")
        out.trace = db::acquaintance_height(env, need(p.a, "a"), need(p.l, "l"), need(p.q, "q"),
                                            need(p.k, "k"));
    else if (name == "packing_height")
        out.trace = db::packing_height(env, need(p.z, "z"), need(p.x, "x"), need(p.p, "p"));
    else if (name == "scattered_n")
        out.trace = db::scattered_n(env, need(p.r, "r"), need(p.a, "a"), need(p.d, "d"));
    else if (name == "scattered_m") out.trace = db::scattered_m(env, need(p.r, "r"));
    else if (name == "panchromatic_b") out.trace = db::panchromatic_b(env, need(p.r, "r"), need(p.a, "a"));
    else if (name == "panchromatic_z") out.trace = db::panchromatic_z(env, need(p.r, "r"), need(p.a, "a"));
    else if (name == "panchromatic_center")
        out.trace = db::panchromatic_center(env, need(p.r, "r"), need(p.a, "a"));
    else if (name == "panchromatic_support")
        out.trace = db::panchromatic_support(env, need(p.r, "r"), need(p.a, "a"));
    else if (name == "panchromatic_margin") out.trace = db::panchromatic_margin(env, need(p.r, "r"));
    else if (name == "grid_universal") out.trace = db::grid_universal(env, need(p.s, "s"));
    else if (name == "forcing_r")
        out.trace = db::forcing_r(env, need(p.a, "a"), need(p.s, "s"), need(p.k, "k"));
    else if (name == "forcing_height")
        out.trace = db::forcing_height(env, need(p.a, "a"), need(p.s, "s"), need(p.k, "k"));
    else if (name == "forcing_degree")
        out.trace = db::forcing_degree(env, need(p.a, "a"), need(p.s, "s"), need(p.k, "k"));
    else if (name == "forcing_depth")
        out.trace = db::forcing_depth(env, need(p.a, "a"), need(p.s, "s"), need(p.k, "k"));
    else if (name == "wall_ratio") out.trace = db::wall_ratio(env, need(p.t, "t"));
    else if (name == "tw_bound")
        out.trace = db::tw_bound(env, need(p.a, "a"), need(p.s, "s"), need(p.k, "k"));
    else if (name == "rep_count") out.trace = db::rep_count(env, need(p.t, "t"), need(p.l, "l"));
    else if (name == "char_domain") out.trace = db::char_domain(env, need(p.t, "t"), need(p.l, "l"));
    else if (name == "repeat_length") {
        if (p.y) out.trace = db::repeat_length_y(env, need(p.k, "k"), need(p.y, "y"));
        else out.trace = db::repeat_length(env, need(p.k, "k"), need(p.t, "t"), need(p.l, "l"));
    } else if (name == "size_bound")
        out.trace = db::size_bound(env, need(p.tw, "tw"), need(p.l, "l"), need(p.k, "k"));
    else if (name == "obstruction_size")
        out.trace = db::obstruction_size(env, need(p.a, "a"), need(p.s, "s"), need(p.k, "k"));
    else throw std::invalid_argument("bounds: unknown bound id '" + name + "'");

    out.value = out.trace.value;
    return out;
}

inline bigint evaluate(const std::string& name, const BoundParams& p) {
    return explain(name, p).value;
}

// Growth-shape probe for the obstruction-size composition; see
// detail_bounds::obstruction_size_loglog2_upper.
inline bigint obstruction_size_loglog2_upper(const BoundParams& p) {
    std::vector<std::string> warnings;
    detail_bounds::Env env{&p.constants, &p.f_ul, p.max_bits, &warnings};
    auto need = [&](const std::optional<long long>& field, const char* flag) -> bigint {
        if (!field)
            throw std::invalid_argument(std::string("bounds: loglog2 probe requires parameter '") +
                                        flag + "'");
        return bigint(*field);
    };
    return detail_bounds::obstruction_size_loglog2_upper(env, need(p.a, "a"), need(p.s, "s"),
                                                         need(p.k, "k"));
}

}  // namespace minorkit
