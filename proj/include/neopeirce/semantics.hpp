#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neopeirce/term.hpp"
#include "neopeirce/theory.hpp"

namespace neopeirce {

using Tuple = std::vector<int>;

struct Relation {
    int domain = 0;
    int dom_arity = 0;
    int cod_arity = 0;
    std::vector<std::pair<Tuple, Tuple>> pairs;  // sorted, duplicate-free

    bool contains(const Tuple& u, const Tuple& v) const;
    bool operator==(const Relation&) const = default;
};

struct Interpretation {
    int domain_size = 0;
    std::map<std::string, Relation> rho;
};

// Dense boolean matrix over X^dom × X^cod, rows and columns indexed by the
// lexicographic rank of the tuple.
struct Dense {
    int k = 0;
    int dom = 0, cod = 0;
    size_t rows = 0, cols = 0;
    std::vector<uint8_t> bits;

    Dense() = default;
    Dense(int k, int dom, int cod, bool fill = false);
    bool at(size_t i, size_t j) const { return bits[i * cols + j]; }
    void set(size_t i, size_t j, bool v = true) { bits[i * cols + j] = v; }
    bool operator==(const Dense&) const = default;
};

size_t ipow(int k, int e);
Tuple decode_tuple(size_t idx, int k, int len);
size_t encode_tuple(const Tuple& t, int k);

Dense to_dense(const Relation& r);
Relation from_dense(const Dense& d);

Relation make_relation(int domain, int dom_arity, int cod_arity, std::vector<std::pair<Tuple, Tuple>> pairs);
Relation complement(const Relation& r);
Relation converse(const Relation& r);
Relation intersect(const Relation& a, const Relation& b);
Relation unite(const Relation& a, const Relation& b);
bool subset(const Relation& a, const Relation& b);

Relation compose_white(const Relation& r, const Relation& s);
Relation compose_black(const Relation& r, const Relation& s);
Dense compose_white(const Dense& a, const Dense& b);
Dense compose_black(const Dense& a, const Dense& b);

Relation eval(const Term& t, const Interpretation& I);
Dense eval_dense(const Term& t, const Interpretation& I);

// Evaluator with ρ pre-converted to dense tables; reuse across many terms.
// Same-colored composition and tensor chains are threaded through one state
// table from the narrower end, so wide inner interfaces cost k^wires rather
// than k^(dom+cod) per subterm.
class Evaluator {
public:
    explicit Evaluator(const Interpretation& I);
    Dense operator()(const Term& t) const;
    // One full table per subterm.
    Dense direct(const Term& t) const;
    int domain() const { return k_; }

private:
    int k_;
    std::map<std::string, Dense> tables_;
    mutable std::map<const TermNode*, std::pair<Term, InterfaceType>> shapes_;
    mutable std::map<const TermNode*, std::pair<Term, Term>> expanded_;
    Dense gen(const Term& t) const;
    Dense leaf(const Term& t) const;
    const Term& expand(const Term& t) const;
    InterfaceType shape(const Term& t) const;
    Dense push(Color c, Dense s, const Term& t, int off, bool mirror) const;
};

bool semantic_includes(const Term& c, const Term& d, const Interpretation& I);

struct Verdict {
    bool holds = true;
    int max_size = 0;  // searched bound when holds
    Interpretation interp;
    Tuple witness_dom, witness_cod;
};

struct OracleOptions {
    int min_size = 0;
    int max_size = 3;
    uint64_t budget = 1000000;
    uint64_t samples = 2000;  // per domain size once the budget is exhausted
    uint64_t seed = 0x5eed;
    // Symbols ranging only over total single-valued relations.
    std::vector<std::string> functional;
};

Verdict bounded_counterexample(const Term& c, const Term& d, const Signature& sig, const OracleOptions& opt = {});
Verdict bounded_counterexample(const Term& c, const Term& d, const Signature& sig, int max_size,
                               uint64_t budget = 1000000);

// All interpretations of the given symbols over a fixed domain size, in
// canonical order (symbols by name, tables by bitmask). Returns false when
// the space exceeds `limit`.
bool for_each_interpretation(const Signature& sig, int domain, uint64_t limit,
                             const std::function<bool(const Interpretation&)>& fn,
                             const std::vector<std::string>& functional = {});
uint64_t interpretation_count(const Signature& sig, int domain, const std::vector<std::string>& functional = {});

bool is_model(const Interpretation& I, const Theory& T);
bool is_map_relation(const Relation& r);

// Symbols occurring in a term (ignores metavariables).
void collect_symbols(const Term& t, std::vector<std::string>& out);
Signature restrict_signature(const Signature& sig, const std::vector<Term>& terms);

}  // namespace neopeirce
