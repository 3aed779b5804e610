#pragma once

#include <string>
#include <vector>

#include "symchar/hall_ops.hpp"
#include "symchar/lambda_ring.hpp"

namespace symchar {

struct RunOptions {
    int threads = 0;        // 0 = auto-detect
    std::string cache_dir;  // empty disables the disk cache
    bool use_cache = true;
};

// Generating character of the graph-degree generator module: coefficient of
// t^{2k-2+n} is h_n, summed over k >= 0, n >= 0 with 2k-2+n >= 0, excluding
// (k,n) in {(0,0),(1,0),(1,1),(0,2)}. The bidegree-(0,0) part vanishes.
CharSeries ch_v(int sym_cap, int t_cap);

enum class ExpMethod { Generic, Gamma };

// Exp(ch_v) at the given caps. Generic evaluates the plethystic exponential
// directly; Gamma sums the closed-form pieces gamma_lambda (see below); the
// two agree exactly within caps. Results are disk-cached when a cache
// directory is configured.
CharSeries exp_ch_v(int sym_cap, int t_cap, ExpMethod method, const RunOptions& opts = {});

// One summand of the Gamma method: for lambda = (1^{l_1} 2^{l_2} ...),
//   gamma_lambda = t^{delta(lambda)} prod_n h_{l_n} o (h_n/(1-t^2))
// with delta = sum c_n l_n, c_1 = 3, c_2 = 2, c_n = n-2 for n >= 3.
CharSeries gamma_lambda(const Partition& lambda, int sym_cap, int t_cap);
int gamma_delta(const Partition& lambda);

enum class TableObject { A, A1, Torelli };

// Per-degree symplectic decompositions of one graded object, multiplicities
// normalized to the characters of the degree-n pieces (all nonnegative
// integers; violations throw).
class CharacterTable {
public:
    CharacterTable(TableObject object, std::vector<SpDecomposition> degrees, int sym_cap,
                   int t_cap, std::string fingerprint);

    TableObject object() const { return object_; }
    int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    const SpDecomposition& degree(int n) const;
    const std::vector<SpDecomposition>& degrees() const { return degrees_; }
    int sym_cap() const { return sym_cap_; }
    int t_cap() const { return t_cap_; }
    const std::string& fingerprint() const { return fingerprint_; }

private:
    TableObject object_;
    std::vector<SpDecomposition> degrees_;
    int sym_cap_;
    int t_cap_;
    std::string fingerprint_;
};

// Characters of the quadratic algebra, its one-marked-point analogue, and
// (under Koszulity) the Torelli Lie algebra, through degree n_max.
CharacterTable char_A(int n_max, const RunOptions& opts = {});
CharacterTable char_A1(int n_max, const RunOptions& opts = {});
CharacterTable char_torelli(int n_max, const RunOptions& opts = {});

// Stable Poincare series of the mapping class group: Exp(1/(1-t^2)) read as
// Exp(sum_{n>=1} t^{2n}); coefficients count partitions into even parts.
CharSeries gamma_infinity(int t_cap);

// Stable Poincare series of mapping-class-group cohomology with coefficients
// in <lambda>: the t^n coefficient is the dimension of the degree-n stable
// cohomology, i.e. (-1)^n times the s_<lambda> multiplicity in the character
// series of the quadratic algebra. Requires |lambda| <= 3 t_cap.
CharSeries poincare_series(const Partition& lambda, int t_cap, const RunOptions& opts = {});

enum class ModuliKind { MarkedPoints, UniversalCurve };

// Characters of the stable cohomology of moduli of curves with marked points
// (MarkedPoints) and of fibred powers of the universal curve (UniversalCurve).
CharSeries stable_moduli_series(ModuliKind kind, int sym_cap, int t_cap,
                                const RunOptions& opts = {});

// Symplectic decomposition of the exterior square of a symplectic module.
SpDecomposition wedge2_sp(const SpDecomposition& d);

// Formula fingerprint for cache keys; changes whenever the generating
// character's term set changes.
std::string chv_fingerprint();

}  // namespace symchar
