// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_IO_HPP
#define HERMITIAN_IO_HPP

#include <string>

#include <json.hpp>

#include "hermitian/closed_form.hpp"
#include "hermitian/counting.hpp"
#include "hermitian/curve.hpp"
#include "hermitian/field.hpp"
#include "hermitian/lpolynomial.hpp"

namespace hermitian {

// Key order follows the documented record layouts, hence ordered_json.
using json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, table };
OutputFormat output_format_from_string(const std::string& name);

json to_json(const FieldSpec& spec);
json to_json(const CurveParams& params);
json to_json(const CountRecord& rec);
json to_json(const WeilSpectrum& spec);
json to_json(const DiscrepancyRow& row);
json lpoly_json(const IntPolynomial& L, const mpz_class& q, std::uint64_t g);

inline const char* count_csv_header() { return "p,k,t,n,count,method"; }
std::string to_csv_row(const CountRecord& rec);

inline const char* discrepancy_csv_header() { return "p,k,t,n,printed_T,true_T,agree"; }
std::string to_csv_row(const DiscrepancyRow& row);

}  // namespace hermitian

#endif
