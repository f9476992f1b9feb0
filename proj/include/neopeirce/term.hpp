#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace neopeirce {

enum class Color : uint8_t { White, Black };

inline Color flip(Color c) { return c == Color::White ? Color::Black : Color::White; }

enum class Gen : uint8_t { Copier, Discard, Cocopier, Codiscard, Id0, Id1, Symm };

enum class SugarFamily : uint8_t { CopierN, DiscardN, CocopierN, CodiscardN, IdN, SymmNM };

// A sugar index: either a literal natural or a named arity variable (patterns only).
struct Arity {
    int value = 0;
    char var = 0;

    static Arity lit(int v) { return {v, 0}; }
    static Arity sym(char v) { return {0, v}; }
    bool is_var() const { return var != 0; }
    bool operator==(const Arity&) const = default;
};

using Path = std::vector<int>;

struct InterfaceType {
    int dom = 0;
    int cod = 0;
    bool operator==(const InterfaceType&) const = default;
};

struct SymbolType {
    int ar = 0;
    int coar = 0;
};

struct Signature {
    std::map<std::string, SymbolType> symbols;

    bool has(const std::string& name) const { return symbols.count(name) != 0; }
};

enum class ErrorKind {
    SyntaxError,
    UnknownSymbol,
    TypeMismatch,
    InvalidPath,
    ArityMismatch,
    ManifestError,
    RedexMismatch,
    IllegalDirection,
    UnknownRule,
    MissingSubst,
    AmbiguousArity,
    JustificationFailed,
    NotClosedFormula,
    UsesUnknownRule,
    ArityError,
    ScopeError,
    NonFunctionalSymbol,
    Untypable,
    TruncationTooSmall,
    InputError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, Path path = {})
        : std::runtime_error(msg), kind_(kind), path_(std::move(path)) {}

    ErrorKind kind() const { return kind_; }
    const Path& path() const { return path_; }

private:
    ErrorKind kind_;
    Path path_;
};

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

enum class Kind : uint8_t { Gen, Rel, Seq, Tensor, Sugar, Meta };

// Meta nodes only occur in rule patterns; a Rel whose name starts with '$' is a
// symbol metavariable.
struct TermNode {
    Kind kind;
    Color color = Color::White;
    Gen gen = Gen::Id1;
    SugarFamily fam = SugarFamily::IdN;
    Arity n, m;
    std::string name;
    Term left, right;
};

Term gen(Gen g, Color c);
Term rel(const std::string& name, Color c);
Term seq(Color c, Term l, Term r);
Term tensor(Color c, Term l, Term r);
Term sugar(SugarFamily f, Color c, Arity n, Arity m = Arity::lit(0));
Term sugar(SugarFamily f, Color c, int n, int m = 0);
Term meta(const std::string& name);

// Right-nested chains; an empty list yields the unit (e) of that color.
Term seq_chain(Color c, const std::vector<Term>& parts);
Term tensor_chain(Color c, const std::vector<Term>& parts);

bool equal(const Term& a, const Term& b);
inline bool is_binary(const Term& t) { return t->kind == Kind::Seq || t->kind == Kind::Tensor; }
size_t term_size(const Term& t);
bool has_meta(const Term& t);

}  // namespace neopeirce
