#pragma once

#include "hecke/calmod.hpp"
#include "hecke/induce.hpp"
#include "hecke/tables.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke {

// Edge w -> s_label w of a region graph, both ends in F and the length going up.
struct RegionEdge {
    int from, to, label;
};
std::vector<RegionEdge> region_graph(const WeylGroup& W, const LocalRegion& region);
std::string region_dot(const WeylGroup& W, const LocalRegion& region, const std::string& name);

struct GraphMatch {
    bool ok = false;
    int anchor = -1;        // element of F playing printed node 1
    bool reversed = false;  // printed arrows point down in length
    std::string detail;
};
// Looks for a bijection from printed nodes onto F carrying printed edges onto region edges
// with the same simple label (-1 matches any label).
GraphMatch match_printed_graph(const WeylGroup& W, const LocalRegion& region,
                               const std::vector<tables::GraphEdge>& printed, int nodes);

// X' and X'' with their inducing data.
struct ExistenceData {
    std::vector<int> I;
    Vec lambda;  // chi' + varpi' or chi'' + varpi''
    HModule U;
    InducedModule X;
};
ExistenceData existence_data(const WeylGroup& W, int tag, const GoldenNum& c = GoldenNum::frac(1, 2));

struct StabilizerReport {
    std::vector<int> in_double_cosets;  // Stab(lambda) cap W^{I,I}, increasing
    std::vector<int> full;              // Stab(lambda)
};
StabilizerReport stabilizer_report(const WeylGroup& W, const std::vector<int>& I, const Vec& lambda);

// Residual orbits of a low rank type have exactly the closed-form norms.
bool lowrank_norms_match(RootType t, const GoldenNum& c, std::string* detail = nullptr);

struct DsSearchEntry {
    std::string sign;
    int dim = 0;
    bool skew = false;
    Temperedness kind = Temperedness::NonTempered;
};
struct DsSearchOrbit {
    Character chi;
    std::vector<DsSearchEntry> regions;  // every nonempty region of the orbit
};
// Calibrated modules of every region attached to each residual orbit.
std::vector<DsSearchOrbit> calibrated_search(const WeylGroup& W, const GoldenNum& c);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke
