#pragma once

#include <optional>

#include "pim/curated.hpp"
#include "pim/lifts.hpp"
#include "pim/pullback.hpp"

namespace pim {

// One verification case: the target identity C = 2^{(2n-1)k + 4n} at n = 1.
struct CaseConfig {
    std::string label;
    int k = 0;
    int n = 1;
    long D = 1;  // fundamental discriminant in the coefficient normalization; only D=1 is exercised
    long field_d = 0;
    HalfIntMat A = HalfIntMat::zero(3);
    std::optional<BasisTable> table;  // degree-3 eigen-coefficient table (k=14)
    std::string table_provenance;
    CuratedStore curated;
    std::map<std::string, std::string> reference;  // expected intermediates, exact strings
    int plus_precision = 1200;
    int series_precision = 200;
};

CaseConfig load_case(const Json& root, const std::string& label, bool allow_unverified = false);

struct ReportEntry {
    std::string name;
    std::string value;
    std::string provenance;  // "computed" or the curated citation
    std::string expected;    // empty when no reference value exists
    bool ok = true;
};

struct Report {
    std::string case_label;
    int embedding = +1;
    std::vector<ReportEntry> entries;
    std::string C_value;
    std::string C_expected;
    bool pass = false;
    std::string first_divergent;
    double seconds = 0.0;

    Json to_json(bool include_timing = true) const;
    std::string to_markdown() const;
};

struct AssembleOptions {
    int embedding = +1;       // +1 / -1: Galois embedding of the lambda-branch
    Rat h_scale = Rat(1);     // rescale h (both sides quadratic in h)
    Rat f1_scale = Rat(1);    // rescale the first basis eigenform column
    bool perturb_curated = false;
    bool check_reference = true;
};

// Solve the rearranged period identity for C and compare with 2^{(2n-1)k+4n}.
std::pair<Scalar, Report> assemble_C(const CaseConfig& cfg, const AssembleOptions& opt = {});

// C is unchanged under h -> 7h and under rescaling the first basis eigenform,
// and changes when a curated input is perturbed (negative control).
bool scale_invariance_suite(const CaseConfig& cfg);

}  // namespace pim
