#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whmf/integer.hpp"
#include "whmf/kolberg.hpp"

namespace whmf {

/// One verified congruence cell.  pass is equivalent to
/// observed >= claimed in the extended naturals; exact identities are
/// recorded with claimed == inf, so they pass only when the difference
/// vanishes entirely.
struct CongruenceRecord {
  int k = 0;
  std::string case_label;
  long a = 0;
  long b = 0;
  long m = 0;
  long n = 0;
  ExtendedNat claimed;
  ExtendedNat observed;
  bool pass = false;
};

CongruenceRecord make_record(int k, std::string case_label, long a, long b, long m, long n,
                             ExtendedNat claimed, ExtendedNat observed);

/// Deterministically ordered verification output; serializes to a stable
/// JSON document {version, params, records, summary} or a plain table.
struct VerificationReport {
  std::string version;
  /// Ordered (key, raw-JSON-value) pairs echoing the verification inputs.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CongruenceRecord> records;

  long total() const { return static_cast<long>(records.size()); }
  long passed() const;
  bool all_pass() const { return passed() == total(); }
  const CongruenceRecord* first_failure() const;

  /// Sorts records lexicographically by (k, case, a, b, m, n); reports built
  /// from the same inputs are byte-identical regardless of build order.
  void finalize();

  std::string to_json(int indent = 2) const;
  std::string to_table() const;
};

/// Verification grid for the main divisibility theorem.
struct TheoremGrid {
  std::vector<int> weights;          // defaults to all six
  int a_max = 4;
  int b_max = 4;
  std::vector<long> m_list = {1, 3, 5, 7};  // odd multipliers for 2^a m
  std::vector<long> n_list = {1, 3, 5, 7};  // odd multipliers for 2^b n
  int tau_b_max = 6;                 // the m = -1 row sweeps b <= tau_b_max
  bool include_no_claim_rows = true;  // emit informational a=b rows
};

/// The claimed exponent of 2 dividing a_k(2^a m, 2^b n) for odd m,n >= 1:
/// gamma*b (a=0), nu (a>0,b=0), chi (a>b>=1), rho+gamma(b-a) (b>a>=1).
/// Throws NoClaim for a == b >= 1.
long claimed_exponent(int k, int a, int b);

/// Claim for the m = -1 row a_k(-1, 2^b n): gamma*b.
long claimed_exponent_tau_row(int k, int b);

/// Claim for the m = 0 rows a_k(0, 2^b n): eta for b = 0, omega for b > 0.
long claimed_exponent_m0_row(int k, int b);

/// Checks every claimed cell of the grid plus the m = -1 and m = 0 rows.
VerificationReport verify_main_theorem(const TheoremGrid& grid = {});

/// Bounds for the per-lemma verifiers; each lemma reads the fields it
/// needs and clamps them to keep default runs at desk scale.
struct LemmaGrid {
  std::vector<int> weights;     // defaults to all six
  int a_max = 4;                // bound on the power-of-two exponent a
  int b_max = 4;                // bound on b
  int tau_b_max = 6;            // tau rows and recursion depth
  long m_max = 15;              // odd single-index sweeps run over 1,3,...,m_max
  long mn_max = 16;             // Hecke relation grids run over 1..mn_max
  std::vector<long> m_list = {1, 3};
  std::vector<long> n_list = {1, 3};
  long precision = 100;         // coefficient-wise series congruences
  long identity_precision = 40;  // coefficient-wise form identities
};

/// Names accepted by verify_lemma, in registry order.
const std::vector<std::string>& lemma_names();

/// Instantiates and checks the named lemma (L2.2, L3.1, L3.2, L3.3, L5.1,
/// L6.3, L6.4, L6.5, P6.6, L6.7, P6.8, L7.1..L7.8, P7.9).
/// Throws UnknownLemma for anything else.
VerificationReport verify_lemma(const std::string& name, const LemmaGrid& grid = {});

/// One rendered stage of the symbolic dissection pipeline.
struct Lemma51Stage {
  std::string name;
  std::string expr;
};

/// Transcript and outcome of the two-dissection pipeline that certifies
/// a_k(2m, 4) == 0 mod 2^{rho+gamma} via the dual weight 2-k.
struct Lemma51Result {
  int k = 0;
  int kprime = 0;          // e_weight index of the dual weight
  Integer c1, c0;          // f_{2-k,4} = Delta^-2 E_{k'} (j^2 + c1 j + c0)
  unsigned modulus_exp = 0;  // rho + gamma + 1, the working modulus
  std::vector<Lemma51Stage> stages;
  bool closed_form_ok = false;  // j-polynomial matches canonical_basis(2-k,4)
  bool numeric_ok = false;      // g(q) matches a_{2-k}(4,2n) mod 2^N
  bool golden_ok = false;       // k=16: the four printed displays reproduced
  bool final_zero = false;      // (g)_1 == 0 mod 2^{rho+gamma}
  bool pass = false;
};

Lemma51Result run_lemma51_pipeline(int k);

/// Informational sharpness probe: no pass/fail, just the observed margin.
struct SharpnessReport {
  int k = 0;
  std::string case_label;
  long cells = 0;
  ExtendedNat min_observed = ExtendedNat::inf();
  bool has_claim = false;
  ExtendedNat min_slack = ExtendedNat::inf();  // min(observed - claimed)
  bool claim_attained = false;                 // some cell met the claim exactly
  long odd_count = 0;                          // cells with an odd coefficient
  std::string str() const;
};

/// Case labels: a0, a>0,b0, a>b>=1, b>a>=1, a=b, m=-1, m=0,b=0, m=0,b>0.
/// a_pin/b_pin (when >= 0) restrict the sweep to a single a or b.
SharpnessReport probe_sharpness(int k, const std::string& case_label,
                                const TheoremGrid& grid = {}, int a_pin = -1, int b_pin = -1);

}  // namespace whmf
