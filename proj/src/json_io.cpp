#include "qsl2/json_io.hpp"

namespace qsl2 {

Json scalar_to_json(const Scalar& s) {
    Json j;
    const FieldContext* ctx = s.context();
    if (!ctx) {
        j["mode"] = "zero";
        return j;
    }
    if (ctx->is_root_of_unity()) {
        j["mode"] = "cyclotomic";
        j["r"] = ctx->order();
        Json coeffs = Json::array();
        for (int i = 0; i < ctx->degree(); ++i) coeffs.push_back(rational_to_string(s.coefficient(i)));
        j["coeffs"] = std::move(coeffs);
    } else {
        j["mode"] = "rational";
        j["q"] = rational_to_string(ctx->q_value());
        j["value"] = rational_to_string(s.rational_value());
    }
    return j;
}

Scalar scalar_from_json(const FieldContext& ctx, const Json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "zero") return Scalar::zero(ctx);
    if (mode == "cyclotomic") {
        if (!ctx.is_root_of_unity() || j.at("r").get<int>() != ctx.order())
            throw std::invalid_argument("scalar encoding does not match the field context");
        Scalar acc = Scalar::zero(ctx);
        const auto& coeffs = j.at("coeffs");
        if (static_cast<int>(coeffs.size()) != ctx.degree())
            throw std::invalid_argument("coefficient count does not match the cyclotomic degree");
        for (int i = 0; i < ctx.degree(); ++i)
            acc += Scalar::of_rational(ctx, rational_from_string(coeffs[static_cast<size_t>(i)].get<std::string>())) *
                   Scalar::q_power(ctx, i);
        return acc;
    }
    if (mode == "rational") {
        if (ctx.is_root_of_unity() || rational_from_string(j.at("q").get<std::string>()) != ctx.q_value())
            throw std::invalid_argument("scalar encoding does not match the field context");
        return Scalar::of_rational(ctx, rational_from_string(j.at("value").get<std::string>()));
    }
    throw std::invalid_argument("unknown scalar mode: " + mode);
}

Json element_to_json(const AlgebraElement& f) {
    Json j = Json::array();
    for (const auto& [mon, coeff] : f.terms()) {
        Json term;
        term["k"] = mon.k;
        term["n"] = mon.n;
        term["m"] = mon.m;
        term["coeff"] = scalar_to_json(coeff);
        j.push_back(std::move(term));
    }
    return j;
}

AlgebraElement element_from_json(const FieldContext& ctx, const Json& j) {
    AlgebraElement f = AlgebraElement::zero(ctx);
    for (const auto& term : j)
        f.add_term(Monomial{term.at("k").get<int>(), term.at("n").get<int>(), term.at("m").get<int>()},
                   scalar_from_json(ctx, term.at("coeff")));
    return f;
}

Json form1_to_json(const Form1& w) {
    Json j = Json::object();
    for (int i = 0; i < 4; ++i)
        if (!w.c[static_cast<size_t>(i)].is_zero()) j[kBasis1Names[i]] = element_to_json(w.c[static_cast<size_t>(i)]);
    return j;
}

Json form2_to_json(const Form2& w) {
    Json j = Json::object();
    for (int i = 0; i < 6; ++i)
        if (!w.c[static_cast<size_t>(i)].is_zero()) j[kBasis2Names[i]] = element_to_json(w.c[static_cast<size_t>(i)]);
    return j;
}

Json tensor11_to_json(const Tensor11& t) {
    Json j = Json::object();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (!t.c[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero())
                j[std::string(kBasis1Names[i]) + "(x)" + kBasis1Names[k]] =
                    element_to_json(t.c[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    return j;
}

Json tensor21_to_json(const Tensor21& t) {
    Json j = Json::object();
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 4; ++k)
            if (!t.c[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero())
                j[std::string(kBasis2Names[i]) + "(x)" + kBasis1Names[k]] =
                    element_to_json(t.c[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    return j;
}

Json connection_to_json(const Connection& A) {
    Json j = Json::object();
    for (int i = 0; i < 4; ++i) {
        Json comp = Json::object();
        for (int l = 0; l < 4; ++l)
            if (!A.component(l, i).is_zero()) comp[kBasis1Names[l]] = element_to_json(A.component(l, i));
        j[std::string("A_") + "abcd"[i]] = std::move(comp);
    }
    return j;
}

Json eigen_record_to_json(const EigenRecord& rec) {
    Json j;
    j["m"] = rec.m;
    j["eigenvalue"] = scalar_to_json(rec.eigenvalue);
    j["dim"] = rec.dim;
    j["generalized_dim"] = rec.generalized_dim;
    j["embedding"] = Json::array({rec.embedding.real(), rec.embedding.imag()});
    return j;
}

Json check_result_to_json(const CheckResult& res) {
    Json j;
    j["id"] = res.id;
    j["claim"] = res.claim;
    switch (res.status) {
        case CheckResult::Status::Pass: j["status"] = "pass"; break;
        case CheckResult::Status::Fail: j["status"] = "fail"; break;
        case CheckResult::Status::Skip: j["status"] = "skipped"; break;
    }
    if (!res.detail.empty()) j["detail"] = res.detail;
    if (!res.artifacts.empty()) {
        Json arts = Json::object();
        for (const auto& [key, value] : res.artifacts) arts[key] = value;
        j["artifacts"] = std::move(arts);
    }
    return j;
}

}  // namespace qsl2
