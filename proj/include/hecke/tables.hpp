#pragma once

#include "hecke/chars.hpp"

#include <string>
#include <vector>

namespace hecke::tables {

// Tabulated data for the 17 discrete series central characters of H4 at c = 1/2.
struct CharData {
    int tag = 0;
    std::vector<Vec> P;      // listing order of P(chi) used for sign vectors
    std::string sign;        // one of '+'/'-' per listed root
    int dim = 0;
    std::vector<Vec> Z;
    std::vector<std::string> region_words;  // elements stated to lie in the region
};

const std::vector<CharData>& characters();
const CharData& character(int tag);

// Representative reconstructed from the listing (solve chi(beta)=c or closed combination).
Character representative(int tag, const GoldenNum& c = GoldenNum::frac(1, 2));
// Independent second route: coefficient expansions for the regular rows, linear solve of
// all P/Z conditions for the others.
Character representative_alt(int tag, const GoldenNum& c = GoldenNum::frac(1, 2));
// Positions (0-based) of '-' in the sign listing.
std::vector<int> j_positions(int tag);

struct GraphEdge {
    int from, to;  // 1-based node numbers as printed
    int label;     // simple index 0..3, or -1 when unreadable
};
// Weight graphs printed for chi14, chi15, chi16, chi17.
std::vector<GraphEdge> weight_graph(int tag);
int weight_graph_nodes(int tag);

// Conjectural W-structure: rows sigma_j with dims, columns in the order of column_tags().
struct SpringerRow {
    std::string label;
    int dim;
    std::vector<int> mult;
};
const std::vector<SpringerRow>& springer_table();
// Column headers; "16'", "17'", "17''" name the non-calibrated modules.
const std::vector<std::string>& springer_columns();

const std::vector<int>& antispherical_tags();

// Data around the existence arguments for chi16 and chi17.
struct InductionData {
    std::vector<int> I;
    Vec chi_local;        // chi' or chi''
    Vec omega;            // varpi' or varpi''
    std::vector<std::string> stab_words;  // elements of Stab(chi_local + omega) cap W^{I,I}
    std::vector<int> stab_lengths;
};
InductionData chi17_induction();
InductionData chi16_induction();
// Weights of U'' listed for the H3 summand.
std::vector<Vec> u2_weights();
// Full stabilizer of chi'' + varpi'': words for the three non-identity elements.
std::vector<std::string> chi16_full_stabilizer();
// The element w3 w2^{-1} in the chi17 stabilizer argument.
std::string chi17_w3w2inv();

// Images w*(beta^k) and w*(Z) for the anti-dominant element of the region.
std::vector<Vec> chi17_wstar_images();
std::vector<Vec> chi17_wstar_z_images();
std::vector<Vec> chi16_wstar_images();
std::vector<Vec> chi16_wstar_z_images();

}  // namespace hecke::tables
