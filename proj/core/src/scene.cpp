// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ristwin/scene.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>

namespace ristwin
{
namespace
{

using json = nlohmann::ordered_json;

std::string join_violations(const std::vector<Violation> &violations)
{
    std::string msg = "scene validation failed:";
    for (const auto &v : violations)
        msg += "\n  [" + v.rule + "] " + v.message;
    return msg;
}

std::string facet_label(std::size_t i) { return "facet " + std::to_string(i); }

// ---- Schema helpers ------------------------------------------------------

void check_keys(const json &j, const std::string &where, std::initializer_list<const char *> allowed,
                std::initializer_list<const char *> required)
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    for (const auto &[key, value] : j.items())
    {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return key == a; }))
            throw ParseError(where + ": unknown key '" + key + "'");
    }
    for (const char *key : required)
        if (!j.contains(key))
            throw ParseError(where + ": missing key '" + std::string(key) + "'");
}

double get_number(const json &j, const std::string &where)
{
    if (!j.is_number())
        throw ParseError(where + ": expected a number");
    return j.get<double>();
}

int get_int(const json &j, const std::string &where)
{
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(where + ": integer out of range");
    return static_cast<int>(v);
}

std::string get_string(const json &j, const std::string &where)
{
    if (!j.is_string())
        throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

Vec3 get_vec3(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 3)
        throw ParseError(where + ": expected [x, y, z]");
    return {get_number(j[0], where + "[0]"), get_number(j[1], where + "[1]"), get_number(j[2], where + "[2]")};
}

json vec3_json(const Vec3 &v) { return json::array({v.x, v.y, v.z}); }

Antenna parse_antenna(const json &j, const std::string &where)
{
    check_keys(j, where, {"position", "gain_dbi"}, {"position"});
    Antenna a;
    a.position = get_vec3(j["position"], where + ".position");
    if (j.contains("gain_dbi"))
        a.gain_dbi = get_number(j["gain_dbi"], where + ".gain_dbi");
    return a;
}

bool finite_scene_numbers(const Scene &scene)
{
    const auto &d = scene.deployment;
    if (!is_finite(d.tx.position) || !is_finite(d.rx.position) || !std::isfinite(d.tx.gain_dbi) ||
        !std::isfinite(d.rx.gain_dbi) || !std::isfinite(d.carrier_frequency_hz) || !std::isfinite(d.tx_power_dbm))
        return false;
    const auto &p = d.ris;
    if (!is_finite(p.center) || !is_finite(p.normal) || !is_finite(p.up) || !std::isfinite(p.element_spacing) ||
        !std::isfinite(p.pattern_exponent))
        return false;
    for (const auto &f : scene.facets)
        for (const auto &v : f.vertices)
            if (!is_finite(v))
                return false;
    return true;
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations))
{
}

const Material *Scene::find_material(std::string_view name) const
{
    for (const auto &m : materials)
        if (m.name == name)
            return &m;
    return nullptr;
}

std::vector<Violation> validate_scene(const Scene &scene)
{
    std::vector<Violation> out;
    auto add = [&](std::string rule, std::string message, std::optional<std::size_t> facet = std::nullopt) {
        out.push_back({std::move(rule), std::move(message), facet});
    };

    if (!finite_scene_numbers(scene))
    {
        add("non-finite", "scene contains a non-finite number");
        return out;
    }

    std::set<std::string> names;
    for (const auto &m : scene.materials)
    {
        if (!(m.reflection_coefficient >= 0.0 && m.reflection_coefficient <= 1.0))
            add("material-range", "material '" + m.name + "': reflection_coefficient " +
                                      std::to_string(m.reflection_coefficient) + " outside [0, 1]");
        if (!names.insert(m.name).second)
            add("material-duplicate", "material '" + m.name + "' defined more than once");
    }

    for (std::size_t i = 0; i < scene.facets.size(); ++i)
    {
        const auto &f = scene.facets[i];
        if (scene.find_material(f.material) == nullptr)
            add("facet-material", facet_label(i) + ": unknown material '" + f.material + "'", i);

        const Vec3 nn = newell_normal(f.vertices);
        const double area = 0.5 * norm(nn);
        if (!(area > min_facet_area))
        {
            add("facet-convexity", facet_label(i) + ": degenerate quad (area " + std::to_string(area) + " m^2)", i);
            continue;
        }
        const Plane plane{centroid(f.vertices), nn * (1.0 / norm(nn))};
        double deviation = 0.0;
        for (const auto &v : f.vertices)
            deviation = std::max(deviation, std::abs(plane.signed_distance(v)));
        if (deviation > coplanarity_tolerance)
        {
            std::ostringstream msg;
            msg << facet_label(i) << ": vertices not coplanar (max out-of-plane deviation " << deviation << " m)";
            add("facet-coplanarity", msg.str(), i);
        }
        bool convex = true;
        for (std::size_t k = 0; k < 4; ++k)
        {
            const Vec3 e0 = f.vertices[(k + 1) % 4] - f.vertices[k];
            const Vec3 e1 = f.vertices[(k + 2) % 4] - f.vertices[(k + 1) % 4];
            if (!(dot(cross(e0, e1), plane.normal) > 2.0 * min_facet_area))
                convex = false;
        }
        if (!convex)
            add("facet-convexity", facet_label(i) + ": quad is not strictly convex", i);
    }

    const auto &d = scene.deployment;
    const auto &p = d.ris;
    if (p.rows < 1 || p.cols < 1)
        add("panel-shape", "ris: rows and cols must be >= 1 (got " + std::to_string(p.rows) + "x" +
                               std::to_string(p.cols) + ")");
    if (std::abs(norm(p.normal) - 1.0) > unit_vector_tolerance || std::abs(norm(p.up) - 1.0) > unit_vector_tolerance ||
        std::abs(dot(p.normal, p.up)) > unit_vector_tolerance)
        add("panel-axes", "ris: normal and up must be orthogonal unit vectors");
    if (!(p.element_spacing > 0.0))
        add("panel-spacing", "ris: element_spacing must be positive");
    if (!(p.pattern_exponent >= 0.0))
        add("panel-pattern", "ris: pattern_exponent must be non-negative");
    if (!(d.carrier_frequency_hz > 0.0))
        add("deployment-frequency", "carrier_frequency_hz must be positive");
    if (d.tx.position == d.rx.position || d.tx.position == p.center || d.rx.position == p.center)
        add("deployment-distinct", "tx, rx and ris center must be pairwise distinct");
    return out;
}

Scene load_scene(std::string_view text)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError(std::string("malformed scene document: ") + e.what());
    }

    check_keys(doc, "scene", {"materials", "facets", "deployment"}, {"materials", "facets", "deployment"});

    Scene scene;
    const auto &materials = doc["materials"];
    if (!materials.is_array())
        throw ParseError("scene.materials: expected an array");
    for (std::size_t i = 0; i < materials.size(); ++i)
    {
        const std::string where = "scene.materials[" + std::to_string(i) + "]";
        check_keys(materials[i], where, {"name", "reflection_coefficient"}, {"name", "reflection_coefficient"});
        scene.materials.push_back({get_string(materials[i]["name"], where + ".name"),
                                   get_number(materials[i]["reflection_coefficient"], where + ".reflection_coefficient")});
    }

    const auto &facets = doc["facets"];
    if (!facets.is_array())
        throw ParseError("scene.facets: expected an array");
    for (std::size_t i = 0; i < facets.size(); ++i)
    {
        const std::string where = "scene.facets[" + std::to_string(i) + "]";
        check_keys(facets[i], where, {"vertices", "material"}, {"vertices", "material"});
        const auto &verts = facets[i]["vertices"];
        if (!verts.is_array() || verts.size() != 4)
            throw ParseError(where + ".vertices: expected exactly 4 vertices");
        Facet f;
        for (std::size_t k = 0; k < 4; ++k)
            f.vertices[k] = get_vec3(verts[k], where + ".vertices[" + std::to_string(k) + "]");
        f.material = get_string(facets[i]["material"], where + ".material");
        scene.facets.push_back(std::move(f));
    }

    const auto &dep = doc["deployment"];
    check_keys(dep, "scene.deployment", {"tx", "rx", "ris", "carrier_frequency_hz", "tx_power_dbm"},
               {"tx", "rx", "ris", "carrier_frequency_hz"});
    auto &d = scene.deployment;
    d.tx = parse_antenna(dep["tx"], "scene.deployment.tx");
    d.rx = parse_antenna(dep["rx"], "scene.deployment.rx");
    d.carrier_frequency_hz = get_number(dep["carrier_frequency_hz"], "scene.deployment.carrier_frequency_hz");
    d.tx_power_dbm = dep.contains("tx_power_dbm") ? get_number(dep["tx_power_dbm"], "scene.deployment.tx_power_dbm") : 0.0;

    const auto &ris = dep["ris"];
    const std::string rw = "scene.deployment.ris";
    check_keys(ris, rw, {"center", "normal", "up", "rows", "cols", "element_spacing", "pattern_exponent"},
               {"center", "normal", "up", "rows", "cols"});
    d.ris.center = get_vec3(ris["center"], rw + ".center");
    d.ris.normal = get_vec3(ris["normal"], rw + ".normal");
    d.ris.up = get_vec3(ris["up"], rw + ".up");
    d.ris.rows = get_int(ris["rows"], rw + ".rows");
    d.ris.cols = get_int(ris["cols"], rw + ".cols");
    d.ris.element_spacing = ris.contains("element_spacing") ? get_number(ris["element_spacing"], rw + ".element_spacing")
                                                            : default_element_spacing(d.carrier_frequency_hz);
    d.ris.pattern_exponent =
        ris.contains("pattern_exponent") ? get_number(ris["pattern_exponent"], rw + ".pattern_exponent") : 1.0;

    if (auto violations = validate_scene(scene); !violations.empty())
        throw ValidationError(std::move(violations));
    return scene;
}

Scene load_scene_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open scene file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_scene(buffer.str());
}

std::string serialize_scene(const Scene &scene)
{
    json doc;
    doc["materials"] = json::array();
    for (const auto &m : scene.materials)
        doc["materials"].push_back({{"name", m.name}, {"reflection_coefficient", m.reflection_coefficient}});
    doc["facets"] = json::array();
    for (const auto &f : scene.facets)
    {
        json verts = json::array();
        for (const auto &v : f.vertices)
            verts.push_back(vec3_json(v));
        doc["facets"].push_back({{"vertices", verts}, {"material", f.material}});
    }
    const auto &d = scene.deployment;
    json ris = {{"center", vec3_json(d.ris.center)},
                {"normal", vec3_json(d.ris.normal)},
                {"up", vec3_json(d.ris.up)},
                {"rows", d.ris.rows},
                {"cols", d.ris.cols},
                {"element_spacing", d.ris.element_spacing},
                {"pattern_exponent", d.ris.pattern_exponent}};
    doc["deployment"] = {{"tx", {{"position", vec3_json(d.tx.position)}, {"gain_dbi", d.tx.gain_dbi}}},
                         {"rx", {{"position", vec3_json(d.rx.position)}, {"gain_dbi", d.rx.gain_dbi}}},
                         {"ris", ris},
                         {"carrier_frequency_hz", d.carrier_frequency_hz},
                         {"tx_power_dbm", d.tx_power_dbm}};
    return doc.dump(2) + "\n";
}

std::vector<Vec3> ris_element_positions(const RisPanel &panel)
{
    std::vector<Vec3> out;
    out.reserve(panel.element_count());
    const Vec3 across = panel.cross_axis();
    const double row_mid = 0.5 * (panel.rows - 1);
    const double col_mid = 0.5 * (panel.cols - 1);
    for (int r = 0; r < panel.rows; ++r)
        for (int c = 0; c < panel.cols; ++c)
            out.push_back(panel.center + panel.up * ((row_mid - r) * panel.element_spacing) +
                          across * ((c - col_mid) * panel.element_spacing));
    return out;
}

Scene with_receiver(const Scene &scene, const Vec3 &rx)
{
    Scene out = scene;
    out.deployment.rx.position = rx;
    return out;
}

} // namespace ristwin
