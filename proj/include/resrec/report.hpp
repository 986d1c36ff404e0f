#pragma once

// JSON / CSV / text renderings of the pipeline's artifacts. Numbers are
// serialized as decimal strings (exact integers and rationals verbatim,
// reals at the working precision), keys in fixed insertion order, so equal
// runs produce byte-identical output.

#include "resrec/binet.hpp"
#include "resrec/expander.hpp"
#include "resrec/graphfam.hpp"
#include "resrec/recurrence.hpp"
#include "resrec/resistance.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace resrec {

using Json = nlohmann::ordered_json;

inline std::string real_str(const Real& v, unsigned digits) {
    return v.str(static_cast<std::streamsize>(digits));
}

inline Json to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline Json to_json(const DetSequence& seq) {
    Json j;
    j["label"] = seq.label;
    j["start"] = seq.start;
    Json arr = Json::array();
    for (const auto& t : seq.terms) arr.push_back(t.str());
    j["terms"] = arr;
    return j;
}

inline Json to_json(const MatrixFamily& fam) {
    Json j;
    j["id"] = fam.id;
    Json top = Json::array();
    for (const auto& row : fam.top().rows) top.push_back(row);
    j["top_block"] = top;
    Json band = Json::array();
    for (const auto& [off, val] : fam.band()) band.push_back(Json::array({off, val}));
    j["band"] = band;
    Json bottom = Json::array();
    for (const auto& row : fam.bottom().rows) bottom.push_back(row);
    j["bottom_block"] = bottom;
    j["min_size"] = fam.min_size();
    return j;
}

inline Json to_json(const EquationSystem& system) {
    Json j;
    j["seed"] = system.seed;
    Json fams = Json::array();
    for (const auto& f : system.families) fams.push_back(to_json(f));
    j["families"] = fams;
    Json eqs = Json::array();
    for (const auto& eq : system.equations) {
        Json je;
        je["lhs"] = eq.lhs;
        Json terms = Json::array();
        for (const auto& [coeff, fid] : eq.rhs) {
            Json t;
            t["coeff"] = to_json(coeff);
            t["family"] = fid;
            terms.push_back(t);
        }
        je["terms"] = terms;
        eqs.push_back(je);
    }
    j["equations"] = eqs;
    Json text = Json::array();
    for (const auto& line : render_system(system)) text.push_back(line);
    j["text"] = text;
    return j;
}

inline Json to_json(const LinearRecurrence& rec) {
    Json j;
    j["label"] = rec.label;
    j["char_poly_X"] = to_json(rec.char_X);
    j["char_poly_X_text"] = rec.char_X.to_string("X");
    j["order"] = rec.order;
    j["cutoff"] = rec.cutoff;
    Json init = Json::array();
    for (const auto& t : rec.initial) init.push_back(t.str());
    j["initial_terms"] = init;
    j["verified_window"] = Json::array({rec.cutoff, rec.verified_hi});
    return j;
}

inline Json to_json(const BinetForm& form) {
    Json j;
    j["precision"] = form.precision;
    j["anchor_window"] = Json::array({form.anchor_lo, form.anchor_hi});
    Json terms = Json::array();
    for (const auto& t : form.terms) {
        Json jt;
        jt["root"] = Json::array(
            {real_str(t.root.re, form.precision), real_str(t.root.im, form.precision)});
        jt["magnitude"] = real_str(abs(t.root), form.precision);
        jt["multiplicity"] = t.multiplicity;
        Json coeffs = Json::array();
        for (const auto& c : t.coeff)
            coeffs.push_back(Json::array(
                {real_str(c.re, form.precision), real_str(c.im, form.precision)}));
        jt["coeff_poly"] = coeffs;
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j;
}

inline Json to_json(const ConvergenceReport& report) {
    Json j;
    j["k"] = report.k;
    j["n_lo"] = report.n_lo;
    j["n_hi"] = report.n_hi;
    j["precision"] = report.precision;
    j["reference_limit"] = to_decimal(report.reference);
    j["limit_value"] = real_str(report.limit_value, report.precision);
    j["identity_residual"] = real_str(report.identity_residual, report.precision);
    j["dominant_magnitude"] = real_str(report.dominant_magnitude, report.precision);
    j["subdominant_magnitude"] = real_str(report.subdominant_magnitude, report.precision);
    j["predicted_rate"] = real_str(report.predicted_rate, report.precision);
    j["empirical_tail_rate"] = real_str(report.empirical_tail_rate, report.precision);
    j["final_error"] = to_decimal(report.final_error);
    j["gates"] = Json{{"identity", report.identity_pass},
                      {"final_error", report.final_error_pass},
                      {"tail_rate", report.tail_rate_pass},
                      {"all", report.pass}};
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["n"] = row.n;
        r["R_exact"] = to_decimal(row.resistance);
        r["Delta"] = to_decimal(row.delta);
        r["error"] = to_decimal(row.err);
        r["ratio"] = row.ratio ? Json(real_str(*row.ratio, 17)) : Json(nullptr);
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

inline std::string to_csv(const ConvergenceReport& report) {
    std::ostringstream out;
    out << "n,R_exact,Delta,error,ratio\n";
    for (const auto& row : report.rows) {
        out << row.n << "," << to_decimal(row.resistance) << "," << to_decimal(row.delta) << ","
            << to_decimal(row.err) << ",";
        if (row.ratio) out << real_str(*row.ratio, 17);
        out << "\n";
    }
    return out.str();
}

}  // namespace resrec
