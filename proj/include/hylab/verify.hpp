#pragma once

#include "hylab/inequality_lab.hpp"
#include "hylab/measures.hpp"
#include "hylab/rng.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hylab {

// randomized curve corpora, one generator per certificate class
CompoundCurve random_monotone_curve(Rng& rng);
CompoundCurve random_lipschitz_curve(Rng& rng);
CompoundCurve random_convex_curve(Rng& rng);
CompoundCurve random_radial_curve(Rng& rng, double phi, int nu, double c);
CompoundCurve random_comb_curve(Rng& rng, int nu, double c);
CompoundCurve random_boxed_curve(Rng& rng, int nu, double c, bool sector_pi4 = false);
std::vector<SubArc> random_subarcs(Rng& rng, const CompoundCurve& curve, int max_arcs = 4);

/// Exact quadratic form <S_theta f, f> = ||L_theta f||_2^2 for step functions
/// (double antiderivative of the 1/(x conj(w) + y w) kernel).
double s_theta_quadratic_form(const FunctionSpec& f, double theta);

struct CheckRow {
    std::string theorem;
    std::uint64_t seed = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckRow> rows;
    bool pass = true;
    double seconds = 0.0;

    void add(const std::string& theorem, std::uint64_t seed, double lhs, double rhs,
             bool ok_when_leq = true);
    void add_flag(const std::string& theorem, std::uint64_t seed, bool ok, double lhs = 0.0,
                  double rhs = 0.0);
};

/// Names of the registered verification suites (property suites plus the
/// acceptance criteria).
std::vector<std::string> suite_names();

/// Run one suite (by name) with the given seed.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

/// Run a list of suites (or all when names is empty) and emit the aggregated
/// CSV (theorem, seed, lhs, rhs, margin, pass). Returns overall pass.
bool run_suites(const std::vector<std::string>& names, std::uint64_t seed, std::ostream& csv,
                std::ostream& log, std::vector<SuiteReport>* out = nullptr);

} // namespace hylab
