#include "interplan/instance_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace interplan {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& message) {
    throw std::runtime_error("instance file: " + message);
}

const json& require(const json& node, const char* key, const std::string& where) {
    auto it = node.find(key);
    if (it == node.end()) schema_error(where + " is missing required key '" + key + "'");
    return *it;
}

std::string require_string(const json& node, const char* key, const std::string& where) {
    const json& value = require(node, key, where);
    if (!value.is_string()) schema_error(where + " key '" + key + "' must be a string");
    return value.get<std::string>();
}

int require_int(const json& node, const char* key, const std::string& where) {
    const json& value = require(node, key, where);
    if (!value.is_number_integer()) schema_error(where + " key '" + key + "' must be an integer");
    return value.get<int>();
}

Money require_money(const json& node, const char* key, const std::string& where) {
    const json& value = require(node, key, where);
    if (!value.is_string())
        schema_error(where + " key '" + key + "' must be a decimal string such as \"12.5\"");
    try {
        return Money::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        schema_error(where + " key '" + key + "': " + e.what());
    }
}

std::vector<std::string> require_string_array(const json& node, const char* key,
                                              const std::string& where) {
    const json& value = require(node, key, where);
    if (!value.is_array()) schema_error(where + " key '" + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) schema_error(where + " key '" + key + "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string optional_comment(const json& node) {
    auto it = node.find("comment");
    if (it == node.end()) return {};
    if (!it->is_string()) schema_error("'comment' must be a string");
    return it->get<std::string>();
}

} // namespace

RawInstance instance_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        schema_error(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("top level must be an object");

    RawInstance raw;
    raw.horizon = require_int(doc, "horizon", "instance");

    const json& operators = require(doc, "operators", "instance");
    if (!operators.is_array()) schema_error("'operators' must be an array");
    for (const auto& node : operators) {
        Operator op;
        op.id = require_string(node, "id", "operator");
        op.name = require_string(node, "name", "operator '" + op.id + "'");
        raw.operators.push_back(std::move(op));
    }

    const json& objects = require(doc, "objects", "instance");
    if (!objects.is_array()) schema_error("'objects' must be an array");
    for (const auto& node : objects) {
        NetworkObject obj;
        obj.id = require_string(node, "id", "object");
        const std::string where = "object '" + obj.id + "'";
        obj.name = require_string(node, "name", where);
        obj.unavailability_cost = require_money(node, "unavailability_cost", where);
        obj.owner = require_string(node, "owner", where);
        obj.affects = require_string_array(node, "affects", where);
        obj.comment = optional_comment(node);
        raw.objects.push_back(std::move(obj));
    }

    const json& types = require(doc, "intervention_types", "instance");
    if (!types.is_array()) schema_error("'intervention_types' must be an array");
    for (const auto& node : types) {
        InterventionType type;
        type.id = require_string(node, "id", "intervention type");
        const std::string where = "intervention type '" + type.id + "'";
        type.name = require_string(node, "name", where);
        type.targets = require_string_array(node, "targets", where);
        type.cost = require_money(node, "cost", where);
        type.g_min = require_int(node, "g_min", where);
        type.g_max = require_int(node, "g_max", where);
        type.responsible = require_string_array(node, "responsible", where);
        if (auto it = node.find("central"); it != node.end()) {
            if (!it->is_object()) schema_error(where + " key 'central' must be an object");
            CentralSchedule central;
            central.start = require_int(*it, "start", where + " central schedule");
            central.interval = require_int(*it, "interval", where + " central schedule");
            type.central = central;
        }
        type.comment = optional_comment(node);
        raw.intervention_types.push_back(std::move(type));
    }

    if (auto it = doc.find("reference_notes"); it != doc.end()) {
        if (!it->is_array()) schema_error("'reference_notes' must be an array of strings");
        for (const auto& note : *it) {
            if (!note.is_string()) schema_error("'reference_notes' must contain only strings");
            raw.reference_notes.push_back(note.get<std::string>());
        }
    }

    return raw;
}

RawInstance load_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read instance file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

std::string instance_to_json(const ProblemInstance& instance) {
    json doc;
    doc["horizon"] = instance.horizon();
    if (!instance.reference_notes().empty()) doc["reference_notes"] = instance.reference_notes();

    doc["operators"] = json::array();
    for (const auto& op : instance.operators())
        doc["operators"].push_back(json{{"id", op.id}, {"name", op.name}});

    doc["objects"] = json::array();
    for (const auto& obj : instance.objects()) {
        json node{{"id", obj.id},
                  {"name", obj.name},
                  {"unavailability_cost", obj.unavailability_cost.str()},
                  {"owner", obj.owner},
                  {"affects", obj.affects}};
        if (!obj.comment.empty()) node["comment"] = obj.comment;
        doc["objects"].push_back(std::move(node));
    }

    doc["intervention_types"] = json::array();
    for (const auto& type : instance.intervention_types()) {
        json node{{"id", type.id},
                  {"name", type.name},
                  {"targets", type.targets},
                  {"cost", type.cost.str()},
                  {"g_min", type.g_min},
                  {"g_max", type.g_max},
                  {"responsible", type.responsible}};
        if (type.central)
            node["central"] = json{{"start", type.central->start}, {"interval", type.central->interval}};
        if (!type.comment.empty()) node["comment"] = type.comment;
        doc["intervention_types"].push_back(std::move(node));
    }

    return doc.dump(2) + "\n";
}

} // namespace interplan
