#pragma once

#include "interplan/money.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace interplan {

struct Operator {
    std::string id;
    std::string name;
};

// Fixed recurring schedule imposed on an intervention type by a central
// authority: executions at start, start + interval, start + 2*interval, ...
struct CentralSchedule {
    int start = 1;
    int interval = 1;
};

struct NetworkObject {
    std::string id;
    std::string name;
    Money unavailability_cost;          // cost of one time step out of service
    std::string owner;                  // operator id
    std::vector<std::string> affects;   // ids of objects dragged out of service with this one
    std::string comment;                // free-form, preserved through load/save

    int index = 0; // 1-based position after validation
};

struct InterventionType {
    std::string id;
    std::string name;
    std::vector<std::string> targets;       // object ids taken out of service by an execution
    Money cost;                             // cost of one execution
    int g_min = 1;                          // minimum steps between executions
    int g_max = 1;                          // maximum steps between executions
    std::vector<std::string> responsible;   // operator ids sharing the execution cost
    std::optional<CentralSchedule> central; // present for centrally imposed types
    std::string comment;

    int index = 0; // 1-based position after validation
};

// Square binary matrix: entry (i, j) = 1 means taking object i out of
// service also takes object j out of service. The diagonal is always 1.
// Partial (weighted) interaction is not supported; entries are 0 or 1.
class InteractionMatrix {
public:
    InteractionMatrix() = default;
    explicit InteractionMatrix(int n);

    int size() const { return n_; }
    int at(int i, int j) const; // 1-based
    void set(int i, int j, int value); // value must be 0 or 1; diagonal stays 1

    friend bool operator==(const InteractionMatrix&, const InteractionMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> cells_;
};

// Binary matrix with one row per object and one column per intervention
// type: entry (i, k) = 1 means type k targets object i.
class RelationMatrix {
public:
    RelationMatrix() = default;
    RelationMatrix(int objects, int types);

    int objects() const { return n_; }
    int types() const { return k_; }
    int at(int i, int k) const; // 1-based
    void set(int i, int k, int value);

    friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<std::uint8_t> cells_;
};

// Binary execution matrix: one row per intervention type, one column per
// time step. Rows follow intervention type declaration order.
class SchedulePlan {
public:
    SchedulePlan() = default;
    SchedulePlan(int types, int horizon);

    int types() const { return k_; }
    int horizon() const { return t_; }

    bool scheduled(int k, int t) const; // 1-based
    void set_scheduled(int k, int t, bool on);

    // Sorted execution steps of row k.
    std::vector<int> row_steps(int k) const;
    int executions(int k) const;

    // Row-major flattened bits; also the tie-break ordering for plans.
    const std::vector<std::uint8_t>& flat() const { return bits_; }

    friend bool operator==(const SchedulePlan&, const SchedulePlan&) = default;
    friend bool operator<(const SchedulePlan& a, const SchedulePlan& b) {
        return a.bits_ < b.bits_;
    }

private:
    int k_ = 0;
    int t_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Instance data as read from a file or assembled by hand, before any
// cross-reference or bound has been checked.
struct RawInstance {
    int horizon = 0;
    std::vector<Operator> operators;
    std::vector<NetworkObject> objects;
    std::vector<InterventionType> intervention_types;
    std::vector<std::string> reference_notes; // free-form, echoed into solver reports
};

struct Violation {
    std::string entity; // offending id, or "instance"
    std::string rule;   // short machine-readable rule tag
    std::string message;
};

struct ValidationResult;

// Validated, immutable problem instance with derived matrices and indices.
class ProblemInstance {
public:
    int horizon() const { return horizon_; }
    const std::vector<Operator>& operators() const { return operators_; }
    const std::vector<NetworkObject>& objects() const { return objects_; }
    const std::vector<InterventionType>& intervention_types() const { return types_; }
    const InteractionMatrix& interaction() const { return interaction_; }
    const RelationMatrix& relation() const { return relation_; }
    const std::vector<std::string>& reference_notes() const { return notes_; }

    int object_count() const { return static_cast<int>(objects_.size()); }
    int type_count() const { return static_cast<int>(types_.size()); }

    // 1-based indices; 0 when the id is unknown.
    int object_index(const std::string& id) const;
    int type_index(const std::string& id) const;
    bool has_operator(const std::string& id) const;

    const NetworkObject& object(int index) const { return objects_[index - 1]; }
    const InterventionType& intervention_type(int index) const { return types_[index - 1]; }

    SchedulePlan empty_plan() const { return SchedulePlan(type_count(), horizon()); }

private:
    friend ValidationResult validate_instance(const RawInstance& raw);

    int horizon_ = 0;
    std::vector<Operator> operators_;
    std::vector<NetworkObject> objects_;
    std::vector<InterventionType> types_;
    InteractionMatrix interaction_;
    RelationMatrix relation_;
    std::vector<std::string> notes_;
    std::unordered_map<std::string, int> object_index_;
    std::unordered_map<std::string, int> type_index_;
    std::unordered_map<std::string, int> operator_index_;
};

struct ValidationResult {
    std::optional<ProblemInstance> instance;
    std::vector<Violation> violations;

    bool ok() const { return instance.has_value(); }
};

// Checks every rule and reports all violations, not just the first.
// On success the result carries the instance with derived matrices.
ValidationResult validate_instance(const RawInstance& raw);

// Derives the interaction matrix from the objects' "affects" lists.
// Object ids must be unique and every referenced id must exist.
InteractionMatrix build_interaction_matrix(const std::vector<NetworkObject>& objects);

// Derives the target relation from the types' target lists.
RelationMatrix build_relation_matrix(const std::vector<NetworkObject>& objects,
                                     const std::vector<InterventionType>& types);

} // namespace interplan
