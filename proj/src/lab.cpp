#include "extrad/lab.hpp"

#include "extrad/spheremap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace extrad {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what)
{
    throw std::invalid_argument("config: " + what);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k)
                ok = true;
        if (!ok)
            config_error("unknown key '" + it.key() + "' in " + where);
    }
}

Perturbation parse_perturbation(const json& j)
{
    if (!j.is_object())
        config_error("perturbation must be an object");
    Perturbation p;
    const std::string type = j.value("type", "harmonic");
    if (type == "harmonic") {
        reject_unknown(j, {"type", "l", "m"}, "harmonic perturbation");
        p.kind = Perturbation::Kind::harmonic;
        p.l = j.value("l", 2);
        p.m = j.value("m", 0);
    } else if (type == "bump") {
        reject_unknown(j, {"type", "width"}, "bump perturbation");
        p.kind = Perturbation::Kind::bump;
        p.width = j.value("width", 0.7);
    } else {
        config_error("perturbation type must be 'harmonic' or 'bump'");
    }
    return p;
}

SurfaceFamilySpec parse_family(const json& j)
{
    if (!j.is_object())
        config_error("family must be an object");
    reject_unknown(j, {"kind", "delta", "dim", "base_radius", "amplitude",
                       "perturbation", "axes", "offset"},
                   "family");
    SurfaceFamilySpec spec;
    if (!j.contains("kind"))
        config_error("family.kind is required");
    spec.kind = family_from_name(j.at("kind").get<std::string>());
    spec.delta = j.value("delta", 0.0);
    spec.dim = j.value("dim", 2);
    spec.base_radius = j.value("base_radius", 1.0);
    spec.amplitude = j.value("amplitude", 0.0);
    if (j.contains("perturbation"))
        spec.perturbation = parse_perturbation(j.at("perturbation"));
    if (j.contains("axes")) {
        const auto ax = j.at("axes").get<std::vector<double>>();
        spec.axes = Eigen::Map<const Vec>(ax.data(), ax.size());
    }
    spec.offset = j.value("offset", 0.0);
    return spec;
}

} // namespace

ExperimentConfig parse_config(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        config_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        config_error("top level must be an object");
    reject_unknown(j, {"family", "sweep", "resolution", "p", "normalize", "output"},
                   "config");
    ExperimentConfig cfg;
    if (!j.contains("family"))
        config_error("family is required");
    cfg.family = parse_family(j.at("family"));
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        reject_unknown(s, {"param", "values"}, "sweep");
        cfg.sweep_param = s.value("param", "");
        if (s.contains("values"))
            cfg.sweep_values = s.at("values").get<std::vector<double>>();
    }
    cfg.resolution = j.value("resolution", 64);
    if (cfg.resolution < 16)
        config_error("resolution must be >= 16");
    cfg.p = j.value("p", 1.0);
    if (cfg.p < 1.0)
        config_error("p must be >= 1");
    cfg.normalize = j.value("normalize", false);
    if (j.contains("output")) {
        const json& o = j.at("output");
        reject_unknown(o, {"format", "path"}, "output");
        cfg.out_format = o.value("format", "csv");
        if (cfg.out_format != "csv" && cfg.out_format != "json")
            config_error("output.format must be 'csv' or 'json'");
        cfg.out_path = o.value("path", "");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        config_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_sweep_value(SurfaceFamilySpec& spec, const std::string& name, double value)
{
    if (name == "amplitude")
        spec.amplitude = value;
    else if (name == "base_radius")
        spec.base_radius = value;
    else if (name == "offset")
        spec.offset = value;
    else if (name == "axis") {
        if (spec.axes.size() == 0)
            config_error("sweep over 'axis' needs an ellipsoid with axes");
        spec.axes[spec.axes.size() - 1] = value;
    } else {
        config_error("unknown sweep parameter '" + name +
                     "' (amplitude | base_radius | offset | axis)");
    }
}

double family_param(const SurfaceFamilySpec& spec)
{
    switch (spec.kind) {
    case FamilyKind::radial_graph: return spec.amplitude;
    case FamilyKind::ellipsoid: return spec.axes.size() ? spec.axes[spec.axes.size() - 1] : 0.0;
    case FamilyKind::offset_sphere: return spec.offset;
    case FamilyKind::geodesic_sphere: return spec.base_radius;
    }
    return 0.0;
}

namespace {

std::string sanitize_status(std::string msg)
{
    for (char& c : msg)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return msg.empty() ? "error" : msg;
}

} // namespace

PinchReport make_report(const ExperimentConfig& cfg, const SurfaceFamilySpec& spec,
                        double param_value)
{
    PinchReport rep;
    rep.family = family_name(spec.kind);
    rep.param = param_value;
    rep.n = spec.dim;
    rep.p = cfg.p;
    try {
        const Immersion imm = build_family(spec);
        const SpaceForm sf = imm.sf;
        const SurfaceSampling s = sample(imm, sf, cfg.resolution);

        std::vector<Vec> pts;
        pts.reserve(s.samples.size());
        for (const SurfaceSample& smp : s.samples)
            pts.push_back(smp.x);
        const EnclosingBall ball = min_enclosing_ball(sf, pts);

        RadialScalars rs = radial_scalars(s, ball);
        double hausdorff = hausdorff_to_sphere(s, ball, std::min(cfg.resolution, 64));
        const ProjectionMap pmap{ball, sf};
        const double dist = distortion(pmap, s);

        double lambda = 1.0;
        if (cfg.normalize) {
            lambda = std::pow(s.total_volume, -1.0 / spec.dim);
            rs = rs.rescaled(lambda);
            hausdorff *= lambda;
        }

        const RadiusGaps gaps = radius_gaps(rs, cfg.p);
        const PhiPsi pp = phi_psi(rs);
        const L2BoundCheck l2 = l2_bound_checks(rs, cfg.p);

        rep.delta = rs.delta;
        rep.volume = rs.volume;
        rep.R = rs.R;
        rep.H_inf = gaps.H_inf;
        rep.H_2p = gaps.H_2p;
        double binf = 0.0;
        for (const RadialSample& smp : rs.samples)
            binf = std::max(binf, smp.b_frob);
        rep.B_inf = binf;
        rep.gap_inf = gaps.gap_inf;
        rep.gap_2p = gaps.gap_2p;
        rep.alpha = gaps.alpha;
        rep.minkowski_residual = minkowski_residual(rs) / rs.volume;
        rep.lemma21ii_slack = lemma21ii_slack(rs);
        rep.phi_l2 = pp.phi_l2;
        rep.phi_inf = pp.phi_inf;
        rep.psi_l2 = pp.psi_l2;
        rep.psi_inf = pp.psi_inf;
        if (l2.applicable) {
            rep.phi_slack = l2.phi_slack;
            rep.psi_slack = l2.psi_slack;
        }
        rep.hausdorff = hausdorff;
        rep.distortion = dist;
        rep.status = "ok";
    } catch (const std::exception& e) {
        rep.status = sanitize_status(e.what());
    }
    return rep;
}

std::vector<PinchReport> run_verify(const ExperimentConfig& cfg)
{
    std::vector<PinchReport> rows;
    rows.push_back(make_report(cfg, cfg.family, family_param(cfg.family)));
    return rows;
}

std::vector<PinchReport> run_sweep(const ExperimentConfig& cfg)
{
    if (cfg.sweep_param.empty() || cfg.sweep_values.empty())
        config_error("sweep requires a parameter name and a value list");
    std::vector<PinchReport> rows;
    for (double v : cfg.sweep_values) {
        SurfaceFamilySpec spec = cfg.family;
        apply_sweep_value(spec, cfg.sweep_param, v);
        rows.push_back(make_report(cfg, spec, v));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const PinchReport& a, const PinchReport& b) {
        return a.family != b.family ? a.family < b.family : a.param < b.param;
    });
    return rows;
}

} // namespace extrad
