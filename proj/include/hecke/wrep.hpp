#pragma once

#include "hecke/calmod.hpp"

#include <string>
#include <vector>

namespace hecke {

// Values on the conjugacy classes of W, in the order of WeylGroup::class_rep.
struct ClassFunction {
    std::vector<GoldenNum> values;
};

// tr M(t_w) for w in the parabolic subgroup the module lives over.
GoldenNum element_trace(const WeylGroup& W, const HModule& M, int w);
// Traces modulo 2^61 - 1 under both embeddings of sqrt5, lifted back to Z[(1+sqrt5)/2].
ClassFunction module_character(const WeylGroup& W, const HModule& M);
// Same values from exact products; slow beyond a few hundred dimensions.
ClassFunction module_character_exact(const WeylGroup& W, const HModule& M);
ClassFunction sign_character(const WeylGroup& W);
ClassFunction trivial_character(const WeylGroup& W);
// Character of V (the reflection representation).
ClassFunction reflection_character(const WeylGroup& W);

// (1/|W|) sum |C| f(C) g(C^{-1}).
GoldenNum class_inner(const WeylGroup& W, const ClassFunction& f, const ClassFunction& g);

int sign_multiplicity(const WeylGroup& W, const HModule& M);
int trivial_multiplicity(const WeylGroup& W, const HModule& M);
// Sign multiplicity over W_gens for a module of a parabolic subalgebra, summed over elements.
int parabolic_sign_multiplicity(const WeylGroup& W, const HModule& M);

// Euler-Poincare pairing through det(1 - w|V).
GoldenNum ep_pairing(const WeylGroup& W, const ClassFunction& m, const ClassFunction& n);
GoldenNum ep_pairing(const WeylGroup& W, const HModule& M, const HModule& N);
// The same pairing as sum_i (-1)^i <M (x) wedge^i V, N>, wedge characters from principal minors.
GoldenNum ep_pairing_wedge(const WeylGroup& W, const ClassFunction& m, const ClassFunction& n);
// tr(wedge^i V)(w) per class.
ClassFunction wedge_character(const WeylGroup& W, int i);

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class AntisphericalMode { Weight, Character };
bool antispherical_test(const WeylGroup& W, const HModule& M, AntisphericalMode mode);
// Runs both modes; throws InvariantViolation if they disagree.
bool antispherical(const WeylGroup& W, const HModule& M);

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A user-supplied character table. Class labels are words of elements of the class.
struct CharTable {
    std::vector<std::string> class_labels;
    std::vector<long> class_sizes;
    std::vector<int> class_map;  // table column -> class index of W
    struct Row {
        std::string name;
        int dim = 0;
        ClassFunction chi;  // in W class order
    };
    std::vector<Row> rows;
    bool complete = false;  // every irreducible present (sum of dim^2 = |W|)
};
// Validates class count, sizes, and orthonormality of the rows.
CharTable ingest_char_table(const WeylGroup& W, const std::string& csv_text);
CharTable load_char_table(const WeylGroup& W, const std::string& path);

struct Component {
    std::string name;
    int dim = 0;
    int mult = 0;
};
std::vector<Component> decompose(const WeylGroup& W, const ClassFunction& chi, const CharTable& table);

}  // namespace hecke
