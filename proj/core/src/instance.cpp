#include "interplan/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace interplan {

InteractionMatrix::InteractionMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {
    for (int i = 1; i <= n; ++i) cells_[static_cast<std::size_t>(i - 1) * n_ + (i - 1)] = 1;
}

int InteractionMatrix::at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void InteractionMatrix::set(int i, int j, int value) {
    if (value != 0 && value != 1)
        throw std::invalid_argument("interaction entries must be 0 or 1; partial interaction is not supported");
    if (i == j) return; // an object always drags itself out of service
    cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = static_cast<std::uint8_t>(value);
}

RelationMatrix::RelationMatrix(int objects, int types)
    : n_(objects), k_(types), cells_(static_cast<std::size_t>(objects) * types, 0) {}

int RelationMatrix::at(int i, int k) const {
    return cells_[static_cast<std::size_t>(i - 1) * k_ + (k - 1)];
}

void RelationMatrix::set(int i, int k, int value) {
    if (value != 0 && value != 1) throw std::invalid_argument("relation entries must be 0 or 1");
    cells_[static_cast<std::size_t>(i - 1) * k_ + (k - 1)] = static_cast<std::uint8_t>(value);
}

SchedulePlan::SchedulePlan(int types, int horizon)
    : k_(types), t_(horizon), bits_(static_cast<std::size_t>(types) * horizon, 0) {}

bool SchedulePlan::scheduled(int k, int t) const {
    return bits_[static_cast<std::size_t>(k - 1) * t_ + (t - 1)] != 0;
}

void SchedulePlan::set_scheduled(int k, int t, bool on) {
    bits_[static_cast<std::size_t>(k - 1) * t_ + (t - 1)] = on ? 1 : 0;
}

std::vector<int> SchedulePlan::row_steps(int k) const {
    std::vector<int> steps;
    for (int t = 1; t <= t_; ++t)
        if (scheduled(k, t)) steps.push_back(t);
    return steps;
}

int SchedulePlan::executions(int k) const {
    int n = 0;
    for (int t = 1; t <= t_; ++t) n += scheduled(k, t) ? 1 : 0;
    return n;
}

namespace {

template <typename T>
std::unordered_map<std::string, int> index_by_id(const std::vector<T>& items) {
    std::unordered_map<std::string, int> map;
    for (std::size_t i = 0; i < items.size(); ++i) map.emplace(items[i].id, static_cast<int>(i + 1));
    return map;
}

} // namespace

InteractionMatrix build_interaction_matrix(const std::vector<NetworkObject>& objects) {
    auto index = index_by_id(objects);
    InteractionMatrix m(static_cast<int>(objects.size()));
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (const std::string& id : objects[i].affects) {
            auto it = index.find(id);
            if (it == index.end())
                throw std::invalid_argument("object '" + objects[i].id + "' affects unknown object '" + id + "'");
            m.set(static_cast<int>(i + 1), it->second, 1);
        }
    }
    return m;
}

RelationMatrix build_relation_matrix(const std::vector<NetworkObject>& objects,
                                     const std::vector<InterventionType>& types) {
    auto index = index_by_id(objects);
    RelationMatrix r(static_cast<int>(objects.size()), static_cast<int>(types.size()));
    for (std::size_t k = 0; k < types.size(); ++k) {
        for (const std::string& id : types[k].targets) {
            auto it = index.find(id);
            if (it == index.end())
                throw std::invalid_argument("type '" + types[k].id + "' targets unknown object '" + id + "'");
            r.set(it->second, static_cast<int>(k + 1), 1);
        }
    }
    return r;
}

int ProblemInstance::object_index(const std::string& id) const {
    auto it = object_index_.find(id);
    return it == object_index_.end() ? 0 : it->second;
}

int ProblemInstance::type_index(const std::string& id) const {
    auto it = type_index_.find(id);
    return it == type_index_.end() ? 0 : it->second;
}

bool ProblemInstance::has_operator(const std::string& id) const {
    return operator_index_.count(id) != 0;
}

ValidationResult validate_instance(const RawInstance& raw) {
    std::vector<Violation> violations;
    const auto flag = [&](std::string entity, std::string rule, std::string message) {
        violations.push_back({std::move(entity), std::move(rule), std::move(message)});
    };

    if (raw.horizon < 1)
        flag("instance", "horizon", "planning horizon must be at least 1, got " + std::to_string(raw.horizon));

    const auto check_unique = [&](const auto& items, const char* what) {
        std::set<std::string> seen;
        for (const auto& item : items) {
            if (item.id.empty()) flag(std::string(what), "empty-id", std::string(what) + std::string(" with empty id"));
            if (!seen.insert(item.id).second)
                flag(item.id, "duplicate-id", std::string("duplicate ") + what + " id '" + item.id + "'");
        }
    };
    check_unique(raw.operators, "operator");
    check_unique(raw.objects, "object");
    check_unique(raw.intervention_types, "intervention type");

    std::set<std::string> operator_ids;
    for (const auto& op : raw.operators) operator_ids.insert(op.id);
    std::set<std::string> object_ids;
    for (const auto& obj : raw.objects) object_ids.insert(obj.id);

    for (const auto& obj : raw.objects) {
        if (obj.unavailability_cost < Money{})
            flag(obj.id, "negative-cost",
                 "object '" + obj.id + "' has negative unavailability cost " + obj.unavailability_cost.str());
        if (!operator_ids.count(obj.owner))
            flag(obj.id, "dangling-reference",
                 "object '" + obj.id + "' is owned by unknown operator '" + obj.owner + "'");
        for (const auto& target : obj.affects) {
            if (target == obj.id)
                flag(obj.id, "self-reference", "object '" + obj.id + "' lists itself in its affects set");
            else if (!object_ids.count(target))
                flag(obj.id, "dangling-reference",
                     "object '" + obj.id + "' affects unknown object '" + target + "'");
        }
    }

    for (const auto& type : raw.intervention_types) {
        if (type.targets.empty())
            flag(type.id, "empty-targets", "intervention type '" + type.id + "' has no target objects");
        for (const auto& target : type.targets)
            if (!object_ids.count(target))
                flag(type.id, "dangling-reference",
                     "intervention type '" + type.id + "' targets unknown object '" + target + "'");
        if (type.cost < Money{})
            flag(type.id, "negative-cost",
                 "intervention type '" + type.id + "' has negative execution cost " + type.cost.str());
        if (type.g_min < 1)
            flag(type.id, "spacing-bounds",
                 "intervention type '" + type.id + "' needs g_min >= 1, got " + std::to_string(type.g_min));
        if (type.g_max < type.g_min)
            flag(type.id, "spacing-bounds",
                 "intervention type '" + type.id + "' has g_min " + std::to_string(type.g_min) +
                     " greater than g_max " + std::to_string(type.g_max));
        if (type.responsible.empty())
            flag(type.id, "no-responsible",
                 "intervention type '" + type.id + "' has no responsible operator");
        std::set<std::string> responsible(type.responsible.begin(), type.responsible.end());
        if (responsible.size() != type.responsible.size())
            flag(type.id, "duplicate-responsible",
                 "intervention type '" + type.id + "' lists a responsible operator twice");
        for (const auto& op : responsible)
            if (!operator_ids.count(op))
                flag(type.id, "dangling-reference",
                     "intervention type '" + type.id + "' names unknown responsible operator '" + op + "'");
        if (!responsible.empty() && type.cost.tenths() % static_cast<std::int64_t>(responsible.size()) != 0)
            flag(type.id, "cost-share",
                 "execution cost " + type.cost.str() + " of '" + type.id + "' does not split evenly among " +
                     std::to_string(responsible.size()) + " responsible operators");
        if (type.central) {
            if (type.central->interval < 1)
                flag(type.id, "central-schedule",
                     "central interval of '" + type.id + "' must be at least 1");
            else if (type.central->interval < type.g_min || type.central->interval > type.g_max)
                flag(type.id, "central-schedule",
                     "central interval " + std::to_string(type.central->interval) + " of '" + type.id +
                         "' lies outside [g_min, g_max] = [" + std::to_string(type.g_min) + ", " +
                         std::to_string(type.g_max) + "]");
            if (type.central->start < 1)
                flag(type.id, "central-schedule", "central start of '" + type.id + "' must be at least 1");
            else if (raw.horizon >= 1 && type.central->start > raw.horizon)
                flag(type.id, "central-schedule",
                     "central start " + std::to_string(type.central->start) + " of '" + type.id +
                         "' exceeds the horizon " + std::to_string(raw.horizon));
        }
    }

    if (!violations.empty()) return {std::nullopt, std::move(violations)};

    ProblemInstance inst;
    inst.horizon_ = raw.horizon;
    inst.operators_ = raw.operators;
    inst.objects_ = raw.objects;
    inst.types_ = raw.intervention_types;
    inst.notes_ = raw.reference_notes;
    for (std::size_t i = 0; i < inst.objects_.size(); ++i) inst.objects_[i].index = static_cast<int>(i + 1);
    for (std::size_t k = 0; k < inst.types_.size(); ++k) inst.types_[k].index = static_cast<int>(k + 1);
    inst.interaction_ = build_interaction_matrix(inst.objects_);
    inst.relation_ = build_relation_matrix(inst.objects_, inst.types_);
    inst.object_index_ = index_by_id(inst.objects_);
    inst.type_index_ = index_by_id(inst.types_);
    inst.operator_index_ = index_by_id(inst.operators_);

    return {std::move(inst), {}};
}

} // namespace interplan
