#include "extrad/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace extrad {

const char* const report_columns[24] = {
    "family", "param", "delta", "n", "volume", "R", "H_inf", "p", "H_2p", "B_inf",
    "gap_inf", "gap_2p", "alpha", "minkowski_residual", "lemma21ii_slack",
    "phi_l2", "phi_inf", "psi_l2", "psi_inf", "phi_slack", "psi_slack",
    "hausdorff", "distortion", "status"};

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const std::optional<double>& v)
{
    return v ? fmt(*v) : std::string("na");
}

} // namespace

std::string csv_header()
{
    std::string h;
    for (int i = 0; i < 24; ++i) {
        if (i) h += ',';
        h += report_columns[i];
    }
    return h;
}

std::string csv_row(const PinchReport& r)
{
    std::ostringstream os;
    os << r.family << ',' << fmt(r.param) << ',' << fmt(r.delta) << ',' << r.n << ','
       << fmt(r.volume) << ',' << fmt(r.R) << ',' << fmt(r.H_inf) << ',' << fmt(r.p) << ','
       << fmt(r.H_2p) << ',' << fmt(r.B_inf) << ',' << fmt(r.gap_inf) << ','
       << fmt(r.gap_2p) << ',' << fmt(r.alpha) << ',' << fmt(r.minkowski_residual) << ','
       << fmt(r.lemma21ii_slack) << ',' << fmt(r.phi_l2) << ',' << fmt(r.phi_inf) << ','
       << fmt(r.psi_l2) << ',' << fmt(r.psi_inf) << ',' << fmt(r.phi_slack) << ','
       << fmt(r.psi_slack) << ',' << fmt(r.hausdorff) << ',' << fmt(r.distortion) << ','
       << r.status;
    return os.str();
}

void write_csv(const std::vector<PinchReport>& rows, std::ostream& os)
{
    os << csv_header() << '\n';
    for (const PinchReport& r : rows)
        os << csv_row(r) << '\n';
}

void write_json(const std::vector<PinchReport>& rows, std::ostream& os)
{
    using nlohmann::json;
    auto opt = [](const std::optional<double>& v) {
        return v ? json(*v) : json(nullptr);
    };
    json arr = json::array();
    for (const PinchReport& r : rows) {
        json row;
        row["family"] = r.family;
        row["param"] = r.param;
        row["delta"] = r.delta;
        row["n"] = r.n;
        row["volume"] = r.volume;
        row["R"] = r.R;
        row["H_inf"] = r.H_inf;
        row["p"] = r.p;
        row["H_2p"] = r.H_2p;
        row["B_inf"] = r.B_inf;
        row["gap_inf"] = r.gap_inf;
        row["gap_2p"] = opt(r.gap_2p);
        row["alpha"] = opt(r.alpha);
        row["minkowski_residual"] = r.minkowski_residual;
        row["lemma21ii_slack"] = r.lemma21ii_slack;
        row["phi_l2"] = r.phi_l2;
        row["phi_inf"] = r.phi_inf;
        row["psi_l2"] = r.psi_l2;
        row["psi_inf"] = r.psi_inf;
        row["phi_slack"] = opt(r.phi_slack);
        row["psi_slack"] = opt(r.psi_slack);
        row["hausdorff"] = r.hausdorff;
        row["distortion"] = r.distortion;
        row["status"] = r.status;
        arr.push_back(std::move(row));
    }
    os << json{{"rows", arr}}.dump(2) << '\n';
}

} // namespace extrad
