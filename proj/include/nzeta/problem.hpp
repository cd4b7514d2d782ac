#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzeta/frobenius.hpp"
#include "nzeta/oracle.hpp"
#include "nzeta/singular.hpp"
#include "nzeta/spectral.hpp"
#include "nzeta/zeta.hpp"

namespace nzeta {

struct ProblemInput {
    int n = 3;
    RatPoly f;
    Int p = 0;
    NumberFieldPtr field;  // rationals when no field line is present
    std::vector<std::vector<NFElem>> points;
    // optional overrides from the input file
    int precision = 0;
    int terms = 0;
    int transversal = -1;
    int64_t budget = 1000000000;
};

ProblemInput parse_problem_text(const std::string& text, const std::string& name);
ProblemInput parse_problem_file(const std::string& path);

struct RunOptions {
    Int prime = 0;  // overrides the input file
    int precision = 0;
    int terms = 0;
    int transversal = -1;
    int64_t budget = 0;
    int jobs = 1;
    bool early_stop = false;
    bool dump_reductions = false;
    int max_degree = -1;
    int count_r = 1;
    int verify_max_r = 2;
};

// ordered key/value output; identical inputs produce byte-identical files
class Report {
  public:
    void put(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void put(const std::string& key, const Int& v) { put(key, v.get_str()); }
    void put(const std::string& key, long v) { put(key, std::to_string(v)); }
    std::string str() const;
    void write(const std::string& path) const;
    const std::vector<std::pair<std::string, std::string>>& rows() const { return rows_; }
    std::string get(const std::string& key) const;

  private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct AnalyzeOutcome {
    std::vector<std::array<int64_t, 3>> dims;  // (j, dim H^n_j, dim H^{n+1}_j)
    int64_t tau_rational = -1;
    EquisingularityReport gate;
    E2Basis basis;
    Report report;
};

AnalyzeOutcome run_analyze(const ProblemInput& in, const RunOptions& opt);

struct ZetaOutcome {
    ZetaResult zeta;
    E2Basis basis;
    std::vector<std::vector<Rat>> frobenius;  // original-coordinate E2 basis
    int terms_used = 0;
    bool early_stopped = false;
    Report report;
};

ZetaOutcome run_zeta(const ProblemInput& in, const RunOptions& opt);

Report run_count(const ProblemInput& in, const RunOptions& opt);
Report run_verify(const ProblemInput& in, const RunOptions& opt,
                  const std::vector<Int>& q_coeffs, const std::vector<int>& denom_exponents);

// composition f(B y) for an integer matrix B
RatPoly substitute_linear(const RatPoly& f, const std::vector<std::vector<long>>& B);

}  // namespace nzeta
