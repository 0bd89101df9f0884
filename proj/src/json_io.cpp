#include "dra/json_io.hpp"

#include <sstream>

namespace dra {

namespace {

// Exact integers as JSON numbers when they fit, decimal strings otherwise.
json int_to_json(const Int &v) {
    if (v.fits_slong_p()) return json(static_cast<long>(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json &j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

json rat_pair(const Rat &q) { return json::array({int_to_json(q.get_num()), int_to_json(q.get_den())}); }

Rat rat_from_pair(const json &j) {
    Rat q(int_from_json(j.at(0)), int_from_json(j.at(1)));
    q.canonicalize();
    return q;
}

} // namespace

json scalar_to_json(const DynamicalScalar &f) {
    json num = json::array();
    for (const auto &c : f.num().coeffs()) num.push_back(rat_pair(c));
    json den = json::array();
    for (const auto &[n, m] : f.den()) den.push_back(json::array({n, m}));
    return json{{"num", num}, {"den", den}};
}

DynamicalScalar scalar_from_json(const json &j) {
    std::vector<Rat> coeffs;
    for (const auto &c : j.at("num")) coeffs.push_back(rat_from_pair(c));
    DynamicalScalar::Den den;
    for (const auto &d : j.at("den")) den[d.at(0).get<long>()] = d.at(1).get<int>();
    return DynamicalScalar(RatPolynomial(std::move(coeffs)), std::move(den));
}

json element_to_json(const AlgebraElement &a) {
    json terms = json::array();
    for (const auto &[m, f] : a.terms())
        terms.push_back(json{{"p", m.p},
                             {"q", m.q},
                             {"r", m.r},
                             {"s", m.s},
                             {"t", m.t},
                             {"coeff", scalar_to_json(f)}});
    return json{{"terms", terms}};
}

AlgebraElement element_from_json(const json &j) {
    AlgebraElement a;
    for (const auto &t : j.at("terms")) {
        PBWMonomial m{t.at("p").get<std::uint32_t>(), t.at("q").get<std::uint32_t>(),
                      t.at("r").get<std::uint32_t>(), t.at("s").get<std::uint32_t>(),
                      t.at("t").get<std::uint32_t>()};
        a.add_term(m, scalar_from_json(t.at("coeff")));
    }
    return a;
}

json dyn_polynomial_to_json(const DynPolynomial &p) {
    json coeffs = json::array();
    for (const auto &c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
    return json{{"indeterminate", indet_name(p.tag())}, {"coeffs", coeffs}};
}

namespace {

json matrix_to_json(const RatMatrix &m) {
    json rows = json::array();
    for (const auto &row : m) {
        json r = json::array();
        for (const auto &x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return rows;
}

} // namespace

json irrep_to_json(const IrrepData &rep) {
    json mats;
    for (const auto &[g, m] : rep.matrices) mats[gen_name(g)] = matrix_to_json(m);
    mats["H"] = matrix_to_json(rep.H_matrix());
    return json{{"lambda", rep.lambda.get_str()},
                {"mu", rep.mu.get_str()},
                {"n", rep.n},
                {"matrices", mats}};
}

json decomposition_to_json(const DecompositionReport &rep) {
    json singulars = json::array();
    for (std::size_t j = 0; j < rep.singular_vectors.size(); ++j) {
        json terms = json::array();
        for (const auto &[kj, c] : rep.singular_vectors[j])
            terms.push_back(json{{"k", kj.first}, {"j", kj.second}, {"coeff", c.get_str()}});
        singulars.push_back(json{{"weight", j}, {"terms", terms}});
    }
    json weights = json::array();
    for (const auto &t : rep.tallies)
        weights.push_back(json{{"weight", t.weight},
                               {"module_dim", t.module_dim},
                               {"span_dim", t.span_dim}});
    return json{{"ell", rep.ell},
                {"max_degree", rep.max_degree},
                {"lambda", rep.lambda.get_str()},
                {"mu", rep.mu.get_str()},
                {"singular_vectors", singulars},
                {"weights", weights},
                {"checks",
                 json{{"singulars_killed", rep.singulars_killed},
                      {"oracle_matches", rep.oracle_matches},
                      {"graded_dimensions_match", rep.graded_dimensions_match}}}};
}

std::string irrep_to_latex(const IrrepData &rep) {
    std::ostringstream out;
    auto emit = [&](const std::string &name, const RatMatrix &m) {
        out << name << " = \\begin{pmatrix}\n";
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m[i].size(); ++j) {
                if (j) out << " & ";
                Rat x = m[i][j];
                if (x.get_den() == 1)
                    out << x.get_num().get_str();
                else
                    out << "\\tfrac{" << x.get_num().get_str() << "}{" << x.get_den().get_str()
                        << "}";
            }
            out << " \\\\\n";
        }
        out << "\\end{pmatrix}\n";
    };
    static const char *names[] = {"x_{-2\\alpha}", "x_{-\\alpha}", "h", "x_{\\alpha}",
                                  "x_{2\\alpha}"};
    for (Gen g : kGenerators) emit(names[static_cast<int>(g)], rep.matrices.at(g));
    emit("H", rep.H_matrix());
    return out.str();
}

} // namespace dra
