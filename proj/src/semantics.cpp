#include "neopeirce/semantics.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "neopeirce/syntax.hpp"

namespace neopeirce {

size_t ipow(int k, int e) {
    size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<size_t>(k);
    return r;
}

Tuple decode_tuple(size_t idx, int k, int len) {
    Tuple t(len);
    for (int i = len - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % k);
        idx /= k;
    }
    return t;
}

size_t encode_tuple(const Tuple& t, int k) {
    size_t idx = 0;
    for (int v : t) idx = idx * k + v;
    return idx;
}

Dense::Dense(int k_, int dom_, int cod_, bool fill)
    : k(k_), dom(dom_), cod(cod_), rows(ipow(k_, dom_)), cols(ipow(k_, cod_)), bits(rows * cols, fill) {}

bool Relation::contains(const Tuple& u, const Tuple& v) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
}

Dense to_dense(const Relation& r) {
    Dense d(r.domain, r.dom_arity, r.cod_arity);
    for (const auto& [u, v] : r.pairs) d.set(encode_tuple(u, r.domain), encode_tuple(v, r.domain));
    return d;
}

Relation from_dense(const Dense& d) {
    Relation r{d.k, d.dom, d.cod, {}};
    for (size_t i = 0; i < d.rows; ++i)
        for (size_t j = 0; j < d.cols; ++j)
            if (d.at(i, j)) r.pairs.emplace_back(decode_tuple(i, d.k, d.dom), decode_tuple(j, d.k, d.cod));
    return r;
}

Relation make_relation(int domain, int dom_arity, int cod_arity, std::vector<std::pair<Tuple, Tuple>> pairs) {
    for (const auto& [u, v] : pairs) {
        if (static_cast<int>(u.size()) != dom_arity || static_cast<int>(v.size()) != cod_arity)
            throw Error(ErrorKind::ArityMismatch, "tuple length does not match relation arity");
        for (int x : u)
            if (x < 0 || x >= domain) throw Error(ErrorKind::InputError, "tuple entry outside domain");
        for (int x : v)
            if (x < 0 || x >= domain) throw Error(ErrorKind::InputError, "tuple entry outside domain");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Relation{domain, dom_arity, cod_arity, std::move(pairs)};
}

namespace {

Dense complement_dense(Dense d) {
    for (auto& b : d.bits) b = !b;
    return d;
}

Dense converse_dense(const Dense& d) {
    Dense r(d.k, d.cod, d.dom);
    for (size_t i = 0; i < d.rows; ++i)
        for (size_t j = 0; j < d.cols; ++j)
            if (d.at(i, j)) r.set(j, i);
    return r;
}

Dense tensor_dense(const Dense& a, const Dense& b, bool white) {
    Dense r(a.k, a.dom + b.dom, a.cod + b.cod);
    for (size_t i1 = 0; i1 < a.rows; ++i1)
        for (size_t i2 = 0; i2 < b.rows; ++i2)
            for (size_t j1 = 0; j1 < a.cols; ++j1)
                for (size_t j2 = 0; j2 < b.cols; ++j2) {
                    bool x = a.at(i1, j1), y = b.at(i2, j2);
                    r.set(i1 * b.rows + i2, j1 * b.cols + j2, white ? (x && y) : (x || y));
                }
    return r;
}

void check_compose(int k1, int k2, int cod, int dom) {
    if (k1 != k2) throw Error(ErrorKind::ArityMismatch, "relations over different domains");
    if (cod != dom) throw Error(ErrorKind::ArityMismatch, "composition arity mismatch");
}

}  // namespace

Dense compose_white(const Dense& a, const Dense& b) {
    check_compose(a.k, b.k, a.cod, b.dom);
    Dense r(a.k, a.dom, b.cod);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t l = 0; l < a.cols; ++l) {
            if (!a.at(i, l)) continue;
            for (size_t j = 0; j < b.cols; ++j)
                if (b.at(l, j)) r.set(i, j);
        }
    return r;
}

// (x, z) ∈ a ;- b  iff  for every middle y: (x, y) ∈ a or (y, z) ∈ b.
Dense compose_black(const Dense& a, const Dense& b) {
    check_compose(a.k, b.k, a.cod, b.dom);
    Dense r(a.k, a.dom, b.cod, true);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < b.cols; ++j) {
            bool all = true;
            for (size_t l = 0; l < a.cols && all; ++l) all = a.at(i, l) || b.at(l, j);
            r.set(i, j, all);
        }
    return r;
}

Relation compose_white(const Relation& r, const Relation& s) {
    return from_dense(compose_white(to_dense(r), to_dense(s)));
}

Relation compose_black(const Relation& r, const Relation& s) {
    return from_dense(compose_black(to_dense(r), to_dense(s)));
}

Relation complement(const Relation& r) { return from_dense(complement_dense(to_dense(r))); }
Relation converse(const Relation& r) { return from_dense(converse_dense(to_dense(r))); }

Relation intersect(const Relation& a, const Relation& b) {
    Relation r{a.domain, a.dom_arity, a.cod_arity, {}};
    std::set_intersection(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                          std::back_inserter(r.pairs));
    return r;
}

Relation unite(const Relation& a, const Relation& b) {
    Relation r{a.domain, a.dom_arity, a.cod_arity, {}};
    std::set_union(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(), std::back_inserter(r.pairs));
    return r;
}

bool subset(const Relation& a, const Relation& b) {
    return std::includes(b.pairs.begin(), b.pairs.end(), a.pairs.begin(), a.pairs.end());
}

Evaluator::Evaluator(const Interpretation& I) : k_(I.domain_size) {
    for (const auto& [name, r] : I.rho) {
        if (r.domain != k_) throw Error(ErrorKind::ArityMismatch, "relation " + name + " over wrong domain");
        tables_.emplace(name, to_dense(r));
    }
}

Dense Evaluator::gen(const Term& t) const {
    const int k = k_;
    Dense d;
    switch (t->gen) {
        case Gen::Id0:
            d = Dense(k, 0, 0, true);
            break;
        case Gen::Id1:
            d = Dense(k, 1, 1);
            for (int x = 0; x < k; ++x) d.set(x, x);
            break;
        case Gen::Copier:
            d = Dense(k, 1, 2);
            for (int x = 0; x < k; ++x) d.set(x, x * k + x);
            break;
        case Gen::Cocopier:
            d = Dense(k, 2, 1);
            for (int x = 0; x < k; ++x) d.set(x * k + x, x);
            break;
        case Gen::Discard: d = Dense(k, 1, 0, true); break;
        case Gen::Codiscard: d = Dense(k, 0, 1, true); break;
        case Gen::Symm:
            d = Dense(k, 2, 2);
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) d.set(x * k + y, y * k + x);
            break;
    }
    return t->color == Color::White ? d : complement_dense(std::move(d));
}

Dense Evaluator::leaf(const Term& t) const {
    switch (t->kind) {
        case Kind::Gen: return gen(t);
        case Kind::Rel: {
            auto it = tables_.find(t->name);
            if (it == tables_.end()) throw Error(ErrorKind::UnknownSymbol, "no interpretation for " + t->name);
            if (t->color == Color::White) return it->second;
            return converse_dense(complement_dense(it->second));
        }
        case Kind::Meta: throw Error(ErrorKind::TypeMismatch, "cannot evaluate metavariable $" + t->name);
        default: throw Error(ErrorKind::TypeMismatch, "malformed term");
    }
}

const Term& Evaluator::expand(const Term& t) const {
    if (t->kind != Kind::Sugar) return t;
    if (t->n.is_var() || t->m.is_var()) throw Error(ErrorKind::TypeMismatch, "cannot evaluate symbolic sugar");
    auto it = expanded_.find(t.get());
    if (it == expanded_.end())
        it = expanded_.emplace(t.get(), std::make_pair(t, expand_sugar(t->fam, t->color, t->n.value, t->m.value)))
                 .first;
    return it->second.second;
}

InterfaceType Evaluator::shape(const Term& t0) const {
    const Term& t = expand(t0);
    auto it = shapes_.find(t.get());
    if (it != shapes_.end()) return it->second.second;
    InterfaceType ty;
    switch (t->kind) {
        case Kind::Gen:
        case Kind::Rel:
        case Kind::Meta: {
            if (t->kind == Kind::Gen) {
                Dense d = gen(t);
                ty = {d.dom, d.cod};
            } else {
                Dense d = leaf(t);
                ty = {d.dom, d.cod};
            }
            break;
        }
        case Kind::Seq: {
            InterfaceType a = shape(t->left), b = shape(t->right);
            check_compose(k_, k_, a.cod, b.dom);
            ty = {a.dom, b.cod};
            break;
        }
        case Kind::Tensor: {
            InterfaceType a = shape(t->left), b = shape(t->right);
            ty = {a.dom + b.dom, a.cod + b.cod};
            break;
        }
        case Kind::Sugar: break;
    }
    shapes_.emplace(t.get(), std::make_pair(t, ty));
    return ty;
}

namespace {

// Composes m into the wires [off, off + m.dom) of s's codomain.
Dense block_compose(Color c, const Dense& s, const Dense& m, int off) {
    const int k = s.k;
    const int wires = s.cod, n = m.dom;
    if (off + n > wires) throw Error(ErrorKind::ArityMismatch, "composition arity mismatch");
    const size_t pre = ipow(k, off), post = ipow(k, wires - off - n), N = m.rows, M = m.cols;
    const bool white = c == Color::White;
    Dense r(k, s.dom, wires - n + m.cod, !white);
    std::vector<uint8_t> acc(M);
    for (size_t i = 0; i < s.rows; ++i)
        for (size_t p = 0; p < pre; ++p)
            for (size_t q = 0; q < post; ++q) {
                std::fill(acc.begin(), acc.end(), white ? 0 : 1);
                for (size_t v = 0; v < N; ++v) {
                    bool bit = s.at(i, (p * N + v) * post + q);
                    if (white && bit)
                        for (size_t w = 0; w < M; ++w) acc[w] |= m.at(v, w);
                    else if (!white && !bit)
                        for (size_t w = 0; w < M; ++w) acc[w] &= m.at(v, w);
                }
                for (size_t w = 0; w < M; ++w) r.set(i, (p * M + w) * post + q, acc[w]);
            }
    return r;
}

Dense unit_dense(int k, int n, Color c) {
    Dense d(k, n, n, c == Color::Black);
    for (size_t i = 0; i < d.rows; ++i) d.set(i, i, c == Color::White);
    return d;
}

}  // namespace

// s ;c t on the wires starting at off; under mirror, t is read as its converse.
Dense Evaluator::push(Color c, Dense s, const Term& t0, int off, bool mirror) const {
    const Term& t = expand(t0);
    if (t->color == c && t->kind == Kind::Seq) {
        const Term& first = mirror ? t->right : t->left;
        const Term& second = mirror ? t->left : t->right;
        return push(c, push(c, std::move(s), first, off, mirror), second, off, mirror);
    }
    if (t->color == c && t->kind == Kind::Tensor) {
        InterfaceType a = shape(t->left);
        s = push(c, std::move(s), t->left, off, mirror);
        return push(c, std::move(s), t->right, off + (mirror ? a.dom : a.cod), mirror);
    }
    Dense m = (*this)(t);
    return block_compose(c, s, mirror ? converse_dense(m) : m, off);
}

Dense Evaluator::operator()(const Term& t0) const {
    const Term& t = expand(t0);
    if (!is_binary(t)) return leaf(t);
    InterfaceType ty = shape(t);
    if (ty.dom <= ty.cod) return push(t->color, unit_dense(k_, ty.dom, t->color), t, 0, false);
    return converse_dense(push(t->color, unit_dense(k_, ty.cod, t->color), t, 0, true));
}

Dense Evaluator::direct(const Term& t) const {
    switch (t->kind) {
        case Kind::Sugar: return direct(expand(t));
        case Kind::Seq: {
            Dense a = direct(t->left), b = direct(t->right);
            return t->color == Color::White ? compose_white(a, b) : compose_black(a, b);
        }
        case Kind::Tensor: return tensor_dense(direct(t->left), direct(t->right), t->color == Color::White);
        default: return leaf(t);
    }
}

Dense eval_dense(const Term& t, const Interpretation& I) { return Evaluator(I)(t); }
Relation eval(const Term& t, const Interpretation& I) { return from_dense(eval_dense(t, I)); }

bool semantic_includes(const Term& c, const Term& d, const Interpretation& I) {
    Evaluator ev(I);
    Dense a = ev(c), b = ev(d);
    if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorKind::TypeMismatch, "inclusion between different types");
    for (size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits[i] && !b.bits[i]) return false;
    return true;
}

void collect_symbols(const Term& t, std::vector<std::string>& out) {
    if (t->kind == Kind::Rel && (t->name.empty() || t->name[0] != '$')) {
        if (std::find(out.begin(), out.end(), t->name) == out.end()) out.push_back(t->name);
    } else if (is_binary(t)) {
        collect_symbols(t->left, out);
        collect_symbols(t->right, out);
    }
}

Signature restrict_signature(const Signature& sig, const std::vector<Term>& terms) {
    std::vector<std::string> names;
    for (const auto& t : terms) collect_symbols(t, names);
    Signature out;
    for (const auto& n : names) {
        auto it = sig.symbols.find(n);
        if (it == sig.symbols.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + n);
        out.symbols.emplace(n, it->second);
    }
    return out;
}

namespace {

bool is_functional(const std::string& name, const std::vector<std::string>& functional) {
    return std::find(functional.begin(), functional.end(), name) != functional.end();
}

// Number of candidate tables for one symbol, or UINT64_MAX when too large.
uint64_t table_count(const SymbolType& s, int k, bool functional) {
    if (functional) {
        uint64_t images = ipow(k, s.coar), rows = ipow(k, s.ar), total = 1;
        for (uint64_t r = 0; r < rows; ++r) {
            if (images != 0 && total > UINT64_MAX / images) return UINT64_MAX;
            total *= images;
        }
        return total;
    }
    size_t c = ipow(k, s.ar + s.coar);
    return c >= 63 ? UINT64_MAX : uint64_t{1} << c;
}

Relation table_at(uint64_t index, const SymbolType& s, int k, bool functional) {
    Dense d(k, s.ar, s.coar);
    if (functional) {
        for (size_t r = d.rows; r-- > 0;) {
            d.set(r, index % d.cols);
            index /= d.cols;
        }
    } else {
        for (size_t b = 0; b < d.bits.size(); ++b) d.bits[b] = (index >> b) & 1u;
    }
    return from_dense(d);
}

}  // namespace

uint64_t interpretation_count(const Signature& sig, int domain, const std::vector<std::string>& functional) {
    uint64_t total = 1;
    for (const auto& [name, s] : sig.symbols) {
        uint64_t n = table_count(s, domain, is_functional(name, functional));
        if (n == UINT64_MAX || (n != 0 && total > UINT64_MAX / n)) return UINT64_MAX;
        total *= n;
    }
    return total;
}

bool for_each_interpretation(const Signature& sig, int domain, uint64_t limit,
                             const std::function<bool(const Interpretation&)>& fn,
                             const std::vector<std::string>& functional) {
    uint64_t count = interpretation_count(sig, domain, functional);
    if (count > limit) return false;
    std::vector<std::pair<std::string, SymbolType>> syms(sig.symbols.begin(), sig.symbols.end());
    std::vector<bool> fun;
    for (const auto& s : syms) fun.push_back(is_functional(s.first, functional));
    Interpretation I{domain, {}};
    for (uint64_t it = 0; it < count; ++it) {
        // odometer: the last symbol varies fastest
        uint64_t rest = it;
        for (size_t s = syms.size(); s-- > 0;) {
            uint64_t base = table_count(syms[s].second, domain, fun[s]);
            I.rho[syms[s].first] = table_at(rest % base, syms[s].second, domain, fun[s]);
            rest /= base;
        }
        if (!fn(I)) break;
    }
    return true;
}

namespace {

bool find_witness(const Dense& a, const Dense& b, Verdict& v) {
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) && !b.at(i, j)) {
                v.holds = false;
                v.witness_dom = decode_tuple(i, a.k, a.dom);
                v.witness_cod = decode_tuple(j, a.k, a.cod);
                return true;
            }
    return false;
}

}  // namespace

Verdict bounded_counterexample(const Term& c, const Term& d, const Signature& sig, const OracleOptions& opt) {
    InterfaceType tc = typecheck(c, sig), td = typecheck(d, sig);
    if (!(tc == td)) throw Error(ErrorKind::TypeMismatch, "sides have different interface types");
    Signature used = restrict_signature(sig, {c, d});
    Verdict v;
    uint64_t remaining = opt.budget;
    std::mt19937_64 rng(opt.seed);
    for (int k = opt.min_size; k <= opt.max_size; ++k) {
        auto test = [&](const Interpretation& I) {
            Evaluator ev(I);
            if (find_witness(ev(c), ev(d), v)) {
                v.interp = I;
                return false;
            }
            return true;
        };
        uint64_t count = interpretation_count(used, k, opt.functional);
        if (count <= remaining) {
            for_each_interpretation(used, k, remaining, test, opt.functional);
            remaining -= count;
        } else {
            remaining = 0;
            for (uint64_t s = 0; s < opt.samples && v.holds; ++s) {
                Interpretation I{k, {}};
                for (const auto& [name, st] : used.symbols) {
                    Dense t(k, st.ar, st.coar);
                    if (is_functional(name, opt.functional)) {
                        for (size_t r = 0; r < t.rows; ++r) t.set(r, rng() % t.cols);
                    } else {
                        for (auto& b : t.bits) b = rng() & 1u;
                    }
                    I.rho[name] = from_dense(t);
                }
                test(I);
            }
        }
        if (!v.holds) return v;
        v.max_size = k;
    }
    return v;
}

Verdict bounded_counterexample(const Term& c, const Term& d, const Signature& sig, int max_size, uint64_t budget) {
    OracleOptions o;
    o.max_size = max_size;
    o.budget = budget;
    return bounded_counterexample(c, d, sig, o);
}

bool is_model(const Interpretation& I, const Theory& T) {
    for (const auto& ax : T.axioms) {
        std::vector<std::string> names;
        collect_symbols(ax.lhs, names);
        collect_symbols(ax.rhs, names);
        for (const auto& n : names)
            if (!I.rho.count(n)) throw Error(ErrorKind::UnknownSymbol, "interpretation lacks symbol " + n);
        if (!semantic_includes(ax.lhs, ax.rhs, I)) return false;
    }
    return true;
}

bool is_map_relation(const Relation& r) {
    Dense d = to_dense(r);
    for (size_t i = 0; i < d.rows; ++i) {
        int hits = 0;
        for (size_t j = 0; j < d.cols; ++j) hits += d.at(i, j);
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace neopeirce
