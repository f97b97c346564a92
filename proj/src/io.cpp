// SPDX-License-Identifier: Apache-2.0
#include "hermitian/io.hpp"

#include <sstream>

namespace hermitian {

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown output format: " + name);
}

json to_json(const FieldSpec& spec) {
    json j;
    j["p"] = spec.p;
    j["n"] = spec.n;
    j["modulus"] = spec.modulus;  // constant term first
    return j;
}

json to_json(const CurveParams& params) {
    json j;
    j["p"] = params.p;
    j["k"] = params.k;
    j["t"] = params.t;
    return j;
}

json to_json(const CountRecord& rec) {
    json j;
    j["p"] = rec.params.p;
    j["k"] = rec.params.k;
    j["t"] = rec.params.t;
    j["n"] = rec.n;
    j["count"] = rec.count.get_str();
    j["method"] = to_string(rec.method);
    return j;
}

json to_json(const WeilSpectrum& spec) {
    json j;
    j["s"] = spec.s;
    j["p"] = spec.p;
    json m = json::array();
    for (const auto& v : spec.m) {
        if (v.fits_slong_p())
            m.push_back(v.get_si());
        else
            m.push_back(v.get_str());
    }
    j["m"] = std::move(m);
    return j;
}

json to_json(const DiscrepancyRow& row) {
    json j;
    j["p"] = row.params.p;
    j["k"] = row.params.k;
    j["t"] = row.params.t;
    j["n"] = row.n;
    j["printed_T"] = row.printed_T.get_str();
    j["true_T"] = row.true_T.get_str();
    j["agree"] = row.agree;
    return j;
}

json lpoly_json(const IntPolynomial& L, const mpz_class& q, std::uint64_t g) {
    json j;
    j["q"] = q.get_str();
    j["genus"] = g;
    json coeffs = json::array();
    for (std::uint64_t i = 0; i <= 2 * g; ++i) coeffs.push_back(L.coeff(i).get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::string to_csv_row(const CountRecord& rec) {
    std::ostringstream out;
    out << rec.params.p << ',' << rec.params.k << ',' << rec.params.t << ',' << rec.n << ','
        << rec.count.get_str() << ',' << to_string(rec.method);
    return out.str();
}

std::string to_csv_row(const DiscrepancyRow& row) {
    std::ostringstream out;
    out << row.params.p << ',' << row.params.k << ',' << row.params.t << ',' << row.n << ','
        << row.printed_T.get_str() << ',' << row.true_T.get_str() << ','
        << (row.agree ? "true" : "false");
    return out.str();
}

}  // namespace hermitian
