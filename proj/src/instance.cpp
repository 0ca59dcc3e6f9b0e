#include "posetfr/instance.hpp"

#include <fstream>

#include <json.hpp>

namespace posetfr {

RingConfig RingConfig::parse(const std::string& text) {
    RingConfig c;
    if (text == "int" || text == "integer") {
        c.kind = Kind::integer;
    } else if (text == "rational") {
        c.kind = Kind::rational;
    } else if (text == "symbolic") {
        c.kind = Kind::symbolic;
    } else if (text.rfind("modp:", 0) == 0) {
        c.kind = Kind::modp;
        try {
            c.modulus = std::stoll(text.substr(5));
        } catch (const std::exception&) {
            fail(Errc::bad_instance, "bad modulus in ring spec: " + text);
        }
        require(c.modulus >= 2, Errc::bad_instance, "modulus must be at least 2");
    } else {
        fail(Errc::bad_instance, "unknown ring: " + text +
                                     " (expected int, rational, modp:<p>, symbolic)");
    }
    return c;
}

std::string RingConfig::str() const {
    switch (kind) {
        case Kind::integer: return "int";
        case Kind::rational: return "rational";
        case Kind::modp: return "modp:" + std::to_string(modulus);
        case Kind::symbolic: return "symbolic";
    }
    return "?";
}

namespace {

using nlohmann::json;

std::map<std::string, std::string> parse_param_map(const json& j, const char* which,
                                                   bool& generic) {
    std::map<std::string, std::string> out;
    if (j.is_string()) {
        require(j.get<std::string>() == "generic", Errc::bad_instance,
                std::string(which) + " must be a per-element map or the string \"generic\"");
        generic = true;
        return out;
    }
    require(j.is_object(), Errc::bad_instance, std::string(which) + " must be an object");
    for (const auto& [name, value] : j.items()) {
        if (value.is_string())
            out[name] = value.get<std::string>();
        else if (value.is_number_integer())
            out[name] = std::to_string(value.get<std::int64_t>());
        else
            fail(Errc::bad_instance, std::string(which) + "." + name + " must be a literal");
    }
    return out;
}

}  // namespace

Instance load_instance_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(Errc::bad_instance, std::string("instance is not valid JSON: ") + e.what());
    }
    require(j.is_object() && j.contains("ground") && j.contains("groups"), Errc::bad_instance,
            "instance needs \"ground\" and \"groups\"");

    std::vector<std::string> ground;
    for (const auto& g : j.at("ground")) {
        require(g.is_string(), Errc::bad_instance, "ground must be a list of names");
        ground.push_back(g.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            require(r.is_array() && r.size() == 2, Errc::bad_instance,
                    "each relation must be a [lower, upper] pair");
            relations.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
        }
    Poset poset(ground, relations);

    std::vector<std::vector<std::uint32_t>> factors(static_cast<std::size_t>(poset.size()));
    const auto& groups = j.at("groups");
    require(groups.is_object(), Errc::bad_instance, "groups must map names to order lists");
    for (const auto& [name, orders] : groups.items()) {
        const int idx = poset.index_of(name);
        std::vector<std::uint32_t> fl;
        if (orders.is_number_integer()) {
            fl.push_back(orders.get<std::uint32_t>());
        } else {
            require(orders.is_array(), Errc::bad_instance,
                    "group for " + name + " must be an order or list of orders");
            for (const auto& m : orders) fl.push_back(m.get<std::uint32_t>());
        }
        factors[static_cast<std::size_t>(idx)] = std::move(fl);
    }
    for (int i = 0; i < poset.size(); ++i)
        require(!factors[static_cast<std::size_t>(i)].empty(), Errc::bad_instance,
                "no group given for element " + poset.name(i));

    Instance inst{Poset(poset), AmbientSpace(std::move(poset), std::move(factors)), {}, false,
                  {}, {}};
    if (j.contains("ring")) inst.ring = RingConfig::parse(j.at("ring").get<std::string>());
    if (j.contains("tau")) inst.tau_literals = parse_param_map(j.at("tau"), "tau",
                                                               inst.generic_params);
    if (j.contains("eta")) inst.eta_literals = parse_param_map(j.at("eta"), "eta",
                                                               inst.generic_params);
    return inst;
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::bad_instance, "cannot open instance file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_instance_text(text);
}

}  // namespace posetfr
