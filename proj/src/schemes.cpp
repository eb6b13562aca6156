#include "kripkit/schemes.hpp"

#include <functional>

namespace kripkit {

Formula gen_B(int h, const std::string& label) {
    Formula acc = bottom();
    for (int i = 1; i <= h; ++i)
        acc = implies(var(i), box(label, or_(dia(label, var(i)), acc)));
    return acc;
}

namespace {

using DiamondFn = std::function<Formula(Formula)>;

Formula gen_rp_core(int m, const DiamondFn& d) {
    // antecedent: p0 ∧ ◇(p1 ∧ ◇(... ∧ ◇ p_{m+1}))
    Formula antecedent = d(var(m + 1));
    for (int i = m; i >= 0; --i) {
        antecedent = and_(var(i), antecedent);
        if (i > 0) antecedent = d(antecedent);
    }
    auto d_pow = [&](int i, Formula f) {
        for (int k = 0; k < i; ++k) f = d(f);
        return f;
    };
    std::vector<Formula> disjuncts;
    for (int i = 0; i <= m + 1; ++i)
        for (int j = i + 1; j <= m + 1; ++j)
            disjuncts.push_back(d_pow(i, and_(var(i), var(j))));
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            disjuncts.push_back(d_pow(i, and_(var(i), d(var(j + 1)))));
    return implies(antecedent, or_all(disjuncts));
}

}  // namespace

Formula gen_rp_uni(int m, const std::string& label) {
    return gen_rp_core(m, [&](Formula f) { return dia(label, std::move(f)); });
}

Formula gen_rp_prod(int m, int k, int n, const std::vector<std::string>& a_labels,
                    const std::vector<std::string>& b_labels) {
    if (k < 1 || n < 1) throw Error("product rpp formula needs positive step bounds");
    return gen_rp_core(m, [&](Formula f) {
        std::vector<Formula> parts;
        for (int i = 1; i <= k; ++i) parts.push_back(dia_alphabet_pow(a_labels, i, f));
        for (int i = 1; i <= n; ++i) parts.push_back(dia_alphabet_pow(b_labels, i, f));
        return or_all(parts);
    });
}

namespace {

Formula translate(const Formula& f, const std::function<Formula(const std::string&, Formula)>& on_dia) {
    switch (f->kind) {
        case NodeKind::Var:
        case NodeKind::Bottom:
            return f;
        case NodeKind::Implies:
            return implies(translate(f->left, on_dia), translate(f->right, on_dia));
        case NodeKind::Diamond:
            return on_dia(f->label, translate(f->left, on_dia));
    }
    throw Error("unreachable formula kind");
}

}  // namespace

Formula translate_pretrans(const Formula& f, int m, const std::vector<std::string>& a_labels) {
    return translate(f, [&](const std::string&, Formula child) {
        return dia_alphabet_leq(a_labels, m, std::move(child));
    });
}

Formula translate_product(const Formula& f, int m, int n,
                          const std::vector<std::string>& a_labels,
                          const std::vector<std::string>& b_labels,
                          const std::string& l1, const std::string& l2) {
    return translate(f, [&](const std::string& label, Formula child) {
        if (label == l1) return dia_alphabet_leq(a_labels, m, std::move(child));
        if (label == l2) return dia_alphabet_leq(b_labels, n, std::move(child));
        throw Error("translate_product: unexpected modality label '" + label + "'");
    });
}

Formula decolor(const Formula& f, const std::string& l1, const std::string& l2) {
    return translate(f, [&](const std::string&, Formula child) {
        return or_(dia(l1, child), dia(l2, child));
    });
}

Formula gen_pretrans_axiom(int m, const std::vector<std::string>& a_labels) {
    return implies(dia_alphabet_pow(a_labels, m + 1, var(0)),
                   dia_alphabet_leq(a_labels, m, var(0)));
}

namespace {

Formula box_alphabet(const std::vector<std::string>& labels, Formula f) {
    return not_(dia_alphabet(labels, not_(std::move(f))));
}

}  // namespace

Formula gen_saw_phi(const std::string& s5_label) {
    const Formula p = var(0);
    const Formula phi1 = dia("d", top());
    const Formula phi2 =
        box("d", dia(s5_label, and_(dia("l", not_(p)), dia("r", p))));
    const Formula phi3 = box("d", box(s5_label, implies(dia("l", p), dia("r", p))));
    return and_(and_(phi1, phi2), phi3);
}

std::vector<Formula> gen_saw_axioms() {
    const std::vector<std::string> all = {"d", "l", "r"};
    const Formula p = var(0);
    std::vector<Formula> axioms;
    axioms.push_back(box_alphabet(all, box_alphabet(all, box_alphabet(all, bottom()))));
    axioms.push_back(box("l", box_alphabet(all, bottom())));
    axioms.push_back(box("r", box_alphabet(all, bottom())));
    axioms.push_back(implies(dia("l", p), box("l", p)));
    axioms.push_back(implies(dia("r", p), box("r", p)));
    axioms.push_back(implies(dia("d", dia("l", p)), dia("d", dia("r", p))));
    return axioms;
}

Formula gen_com(const std::string& a, const std::string& b) {
    return implies(dia(a, dia(b, var(0))), dia(b, dia(a, var(0))));
}

Formula gen_chr(const std::string& a, const std::string& b) {
    return implies(dia(a, box(b, var(0))), box(b, dia(a, var(0))));
}

Formula gen_tack2_cr() {
    const Formula p = var(0);
    return implies(dia("1", dia("2", box("1", box("2", p)))),
                   box("1", box("2", dia("1", dia("2", p)))));
}

Formula gen_tack2_mc() {
    const Formula p = var(0);
    return implies(box("1", box("2", dia("1", dia("2", p)))),
                   dia("1", dia("2", box("1", box("2", p)))));
}

Formula gen_tack2_relativized_sym() {
    const Formula p = var(0);
    const Formula q = var(1);
    return implies(and_(and_(dia("1", box("1", q)), not_(q)), p),
                   box("1", implies(not_(q), dia("1", p))));
}

std::vector<Formula> gen_tack2_axioms() {
    return {gen_tack2_cr(), gen_tack2_mc(), gen_tack2_relativized_sym()};
}

}  // namespace kripkit
