#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <halfhex/bijections.hpp>
#include <halfhex/bitstream.hpp>
#include <halfhex/height.hpp>
#include <halfhex/limitshape.hpp>
#include <halfhex/models.hpp>
#include <halfhex/tableau.hpp>
#include <halfhex/version.hpp>

namespace halfhex {

// JSON and CSV codecs for the five models, domino tilings, and the
// limit-shape artifacts.  Field order is fixed (ordered_json) and all
// floating-point text goes through one fixed-width formatter, so a
// given value always serializes to the same bytes.

using ojson = nlohmann::ordered_json;

inline std::string format_fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

namespace detail {

inline void require_model(const ojson& j, const char* name) {
    if (!j.is_object() || !j.contains("model") || !j["model"].is_string() ||
        j["model"].get<std::string>() != name)
        throw std::invalid_argument(std::string("expected a \"") + name + "\" object");
}

inline void require_order(const ojson& j, int order) {
    if (j.at("order").get<int>() != order)
        throw std::invalid_argument("order field does not match the data");
}

}  // namespace detail

// --------------------------------------------------------------------------
// Model objects
//
// Schemas (all coordinates integer):
//   tableau   {model, order, rows}            rows: row-major list of lists
//   particles {model, order, rows}            positions per row, sorted
//   matching  {model, order, vertical_rows}   particle-carrying edges
//   lozenges  {model, order, tiles}           tiles: [{kind, p, q}], sorted
//   paths     {model, order, steps}           steps: strings over R/U

inline ojson to_json(const StaircaseTableau& t) {
    ojson j;
    j["model"] = "tableau";
    j["order"] = t.order();
    j["rows"] = ojson::array();
    for (int r = 0; r <= t.order(); ++r) {
        auto row = t.row(r);
        j["rows"].push_back(std::vector<int>(row.begin(), row.end()));
    }
    return j;
}

inline ojson to_json(const ParticleSystem& p) {
    ojson j;
    j["model"] = "particles";
    j["order"] = p.order;
    j["rows"] = p.rows;
    return j;
}

inline ojson to_json(const HalfHexMatching& m) {
    ojson j;
    j["model"] = "matching";
    j["order"] = m.order;
    j["vertical_rows"] = m.vertical_rows;
    return j;
}

inline ojson to_json(const LozengeTiling& t) {
    ojson j;
    j["model"] = "lozenges";
    j["order"] = t.order;
    j["tiles"] = ojson::array();
    for (const Lozenge& l : t.tiles)
        j["tiles"].push_back({{"kind", std::string(1, l.kind)}, {"p", l.p}, {"q", l.q}});
    return j;
}

inline ojson to_json(const LatticePathFamily& f) {
    ojson j;
    j["model"] = "paths";
    j["order"] = f.order;
    j["steps"] = f.steps;
    return j;
}

inline StaircaseTableau tableau_from_json(const ojson& j) {
    detail::require_model(j, "tableau");
    const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (const TableauError e = check_rows(rows); e != TableauError::none)
        throw std::invalid_argument(std::string("invalid tableau rows: ") + describe(e));
    StaircaseTableau t = tableau_from_rows(rows);
    detail::require_order(j, t.order());
    return t;
}

inline ParticleSystem particles_from_json(const ojson& j) {
    detail::require_model(j, "particles");
    ParticleSystem p;
    p.order = j.at("order").get<int>();
    p.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    particles_to_st(p);  // validates
    return p;
}

inline HalfHexMatching matching_from_json(const ojson& j) {
    detail::require_model(j, "matching");
    HalfHexMatching m;
    m.order = j.at("order").get<int>();
    m.vertical_rows = j.at("vertical_rows").get<std::vector<std::vector<int>>>();
    matching_to_particles(m);  // validates
    return m;
}

inline LozengeTiling lozenges_from_json(const ojson& j) {
    detail::require_model(j, "lozenges");
    LozengeTiling t;
    t.order = j.at("order").get<int>();
    for (const ojson& e : j.at("tiles")) {
        const std::string kind = e.at("kind").get<std::string>();
        if (kind.size() != 1 || (kind[0] != 'N' && kind[0] != 'E' && kind[0] != 'W'))
            throw std::invalid_argument("lozenge kind must be N, E or W");
        t.tiles.push_back({kind[0], e.at("p").get<int>(), e.at("q").get<int>()});
    }
    std::sort(t.tiles.begin(), t.tiles.end());
    if (!validate_tiling(t)) throw std::invalid_argument("invalid lozenge tiling");
    return t;
}

inline LatticePathFamily paths_from_json(const ojson& j) {
    detail::require_model(j, "paths");
    LatticePathFamily f;
    f.order = j.at("order").get<int>();
    f.steps = j.at("steps").get<std::vector<std::string>>();
    paths_to_lozenges(f);  // validates shape and disjointness
    return f;
}

// Any of the five model objects, pulled back to the canonical state.
inline StaircaseTableau tableau_from_any_json(const ojson& j) {
    if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
        throw std::invalid_argument("expected a model object with a \"model\" field");
    const std::string m = j["model"].get<std::string>();
    if (m == "tableau") return tableau_from_json(j);
    if (m == "particles") return particles_to_st(particles_from_json(j));
    if (m == "matching")
        return particles_to_st(matching_to_particles(matching_from_json(j)));
    if (m == "lozenges")
        return particles_to_st(
            matching_to_particles(lozenges_to_matching(lozenges_from_json(j))));
    if (m == "paths")
        return particles_to_st(matching_to_particles(
            lozenges_to_matching(paths_to_lozenges(paths_from_json(j)))));
    throw std::invalid_argument("unknown model \"" + m + "\"");
}

// The canonical state rendered into one of the five model schemas.
inline ojson model_to_json(const StaircaseTableau& t, const std::string& model) {
    if (model == "tableau") return to_json(t);
    if (model == "particles") return to_json(st_to_particles(t));
    if (model == "matching") return to_json(particles_to_matching(st_to_particles(t)));
    if (model == "lozenges")
        return to_json(matching_to_lozenges(particles_to_matching(st_to_particles(t))));
    if (model == "paths")
        return to_json(lozenges_to_paths(
            matching_to_lozenges(particles_to_matching(st_to_particles(t)))));
    throw std::invalid_argument("unknown model \"" + model + "\"");
}

// --------------------------------------------------------------------------
// Sample files
//
// {halfhex, rng{name, version, seed}, model, order, count, samples};
// sample k is drawn from trajectory k of the stream, so the entries
// are independent and the file is a pure function of (version, flags,
// seed).

inline ojson sample_document(const std::string& model, int order, int count,
                             std::uint64_t seed,
                             const std::vector<StaircaseTableau>& states) {
    ojson j;
    j["halfhex"] = library_version;
    j["rng"] = {{"name", bitstream_name}, {"version", bitstream_version}, {"seed", seed}};
    j["model"] = model;
    j["order"] = order;
    j["count"] = count;
    j["samples"] = ojson::array();
    for (int k = 0; k < count; ++k) {
        ojson s = model_to_json(states[k], model);
        s["trajectory"] = k;
        j["samples"].push_back(std::move(s));
    }
    return j;
}

// First sample of a sample document, or the bare model object itself.
inline StaircaseTableau first_sample_from_json(const ojson& j) {
    if (j.is_object() && j.contains("samples")) {
        const ojson& arr = j.at("samples");
        if (!arr.is_array() || arr.empty())
            throw std::invalid_argument("sample file holds no samples");
        return tableau_from_any_json(arr.front());
    }
    return tableau_from_any_json(j);
}

inline std::string samples_to_csv(const std::string& model, int order, int count,
                                  std::uint64_t seed,
                                  const std::vector<StaircaseTableau>& states) {
    std::string out;
    out += "# halfhex " + std::string(library_version) + " sample model=" + model +
           " order=" + std::to_string(order) + " count=" + std::to_string(count) +
           " seed=" + std::to_string(seed) + "\n";
    out += "# rng name=" + std::string(bitstream_name) +
           " version=" + std::to_string(bitstream_version) + "\n";
    for (int k = 0; k < count; ++k) {
        out += "# sample trajectory=" + std::to_string(k) + "\n";
        const ojson s = model_to_json(states[k], model);
        if (model == "lozenges") {
            for (const ojson& e : s["tiles"])
                out += e["kind"].get<std::string>() + "," +
                       std::to_string(e["p"].get<int>()) + "," +
                       std::to_string(e["q"].get<int>()) + "\n";
        } else if (model == "paths") {
            for (const ojson& e : s["steps"]) out += e.get<std::string>() + "\n";
        } else {
            const char* field = model == "matching" ? "vertical_rows" : "rows";
            for (const ojson& row : s[field]) {
                std::string line;
                for (const ojson& v : row) {
                    if (!line.empty()) line += ",";
                    line += std::to_string(v.get<int>());
                }
                out += line + "\n";
            }
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Planar regions and domino tilings
//
//   region {model, squares}                   squares: [[x, y], ...]
//   tiling {model, region, dominoes}          dominoes: [{x, y, horizontal}]
// A domino record names its lower-left square.

inline ojson to_json(const PlanarRegion& r) {
    ojson j;
    j["model"] = "region";
    j["squares"] = ojson::array();
    for (const auto& [x, y] : r.squares) j["squares"].push_back({x, y});
    return j;
}

inline PlanarRegion region_from_json(const ojson& j) {
    detail::require_model(j, "region");
    std::vector<std::pair<int, int>> squares;
    for (const ojson& e : j.at("squares")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("region square must be a pair [x, y]");
        squares.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return PlanarRegion::from_squares(squares);
}

inline ojson tiling_to_json(const PlanarRegion& region, std::vector<Domino> tiling) {
    std::sort(tiling.begin(), tiling.end());
    ojson j;
    j["model"] = "tiling";
    j["region"] = to_json(region);
    j["region"].erase("model");
    j["dominoes"] = ojson::array();
    for (const Domino& d : tiling)
        j["dominoes"].push_back({{"x", d.x}, {"y", d.y}, {"horizontal", d.horizontal}});
    return j;
}

inline std::pair<PlanarRegion, std::vector<Domino>> tiling_from_json(const ojson& j) {
    detail::require_model(j, "tiling");
    std::vector<Domino> tiling;
    for (const ojson& e : j.at("dominoes"))
        tiling.push_back(
            {e.at("x").get<int>(), e.at("y").get<int>(), e.at("horizontal").get<bool>()});
    PlanarRegion region;
    if (j.contains("region")) {
        ojson r = j["region"];
        r["model"] = "region";
        region = region_from_json(r);
    } else {
        std::vector<std::pair<int, int>> squares;
        for (const Domino& d : tiling)
            for (const auto& [x, y] : d.cells()) squares.push_back({x, y});
        region = PlanarRegion::from_squares(squares);
    }
    height_of_tiling(region, tiling);  // validates the exact cover
    return {region, tiling};
}

// --------------------------------------------------------------------------
// Limit-shape artifacts

inline std::string density_to_csv(const DensityField& d, std::uint64_t seed) {
    std::string out;
    out += "# halfhex " + std::string(library_version) +
           " density order=" + std::to_string(d.order) +
           " samples=" + std::to_string(d.samples) + " seed=" + std::to_string(seed) + "\n";
    out += "# rng name=" + std::string(bitstream_name) +
           " version=" + std::to_string(bitstream_version) + "\n";
    out += "row,position,frequency\n";
    for (int r = 0; r <= d.order; ++r)
        for (int p = 0; p < 2 * d.order + 1; ++p)
            out += std::to_string(r) + "," + std::to_string(p + 1) + "," +
                   format_fixed(d.freq[r][p], 9) + "\n";
    return out;
}

inline std::string points_to_csv(const std::vector<std::pair<double, double>>& pts) {
    std::string out = "x,y\n";
    for (const auto& [x, y] : pts)
        out += format_fixed(x, 9) + "," + format_fixed(y, 9) + "\n";
    return out;
}

inline ojson to_json(const CurveFit& f) {
    ojson j;
    j["model"] = f.model == CurveModel::quadratic ? "quadratic" : "general_conic";
    j["coefficients"] = f.coefficients;
    j["sup_residual"] = f.sup_residual;
    j["rms_residual"] = f.rms_residual;
    j["discriminant"] = f.discriminant;
    return j;
}

}
