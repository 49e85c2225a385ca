#pragma once

#include "cmlab/reflgrp/params.hpp"

#include <json.hpp>

namespace cmlab {

inline nlohmann::ordered_json group_info_json(const ReflectionGroup& g) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["group"] = g.spec;
    j["order"] = g.order();
    j["rank"] = g.rank;
    j["elements"] = g.names;
    ordered_json classes = ordered_json::array();
    for (const auto& c : g.classes) {
        ordered_json cj = ordered_json::array();
        for (int w : c) cj.push_back(g.names[w]);
        classes.push_back(cj);
    }
    j["conjugacy_classes"] = classes;
    ordered_json refl = ordered_json::array();
    for (const auto& rc : g.refl_classes) {
        ordered_json r;
        r["parameter"] = rc.param;
        ordered_json mem = ordered_json::array();
        for (int w : rc.members) mem.push_back(g.names[w]);
        r["members"] = mem;
        r["hyperplane_orbit"] = rc.orbit;
        r["power"] = rc.power;
        refl.push_back(r);
    }
    j["reflection_classes"] = refl;
    ordered_json orbits = ordered_json::array();
    for (const auto& o : g.orbits) {
        ordered_json oj;
        oj["label"] = o.label;
        oj["e"] = o.e;
        oj["hyperplanes"] = o.distinguished.size();
        orbits.push_back(oj);
    }
    j["hyperplane_orbits"] = orbits;
    j["degrees"] = g.degrees;
    ordered_json chars = ordered_json::array();
    for (const auto& c : g.chars) {
        ordered_json cj;
        cj["name"] = c.name;
        ordered_json vals = ordered_json::array();
        for (const auto& cl : g.classes) vals.push_back(c.values[cl[0]].str());
        cj["values_on_classes"] = vals;
        cj["fake_degree"] = fake_degree(g, c).str();
        cj["b"] = b_invariant(g, c);
        chars.push_back(cj);
    }
    j["characters"] = chars;
    return j;
}

}  // namespace cmlab
