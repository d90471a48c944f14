#include "interplan/cost.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace interplan {

namespace {

void require_matching_dimensions(const ProblemInstance& instance, const SchedulePlan& plan) {
    if (plan.types() != instance.type_count() || plan.horizon() != instance.horizon())
        throw std::invalid_argument("plan dimensions do not match the instance");
}

} // namespace

CostEvaluator::CostEvaluator(const ProblemInstance& instance) : instance_(&instance) {
    const int n = instance.object_count();
    words_ = (n + 63) / 64;

    object_tenths_.reserve(n);
    for (const auto& obj : instance.objects()) object_tenths_.push_back(obj.unavailability_cost.tenths());

    for (const auto& type : instance.intervention_types()) {
        type_tenths_.push_back(type.cost.tenths());
        Mask mask(words_, 0);
        for (const std::string& target : type.targets) {
            const int i = instance.object_index(target);
            for (int j = 1; j <= n; ++j)
                if (instance.interaction().at(i, j))
                    mask[(j - 1) / 64] |= std::uint64_t{1} << ((j - 1) % 64);
        }
        impact_.push_back(std::move(mask));
    }
}

std::int64_t CostEvaluator::mask_cost_tenths(const Mask& mask) const {
    std::int64_t tenths = 0;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = mask[w];
        while (bits) {
            const int bit = __builtin_ctzll(bits);
            tenths += object_tenths_[w * 64 + bit];
            bits &= bits - 1;
        }
    }
    return tenths;
}

std::int64_t CostEvaluator::step_f2_tenths(const SchedulePlan& plan, int t, Mask& scratch) const {
    std::fill(scratch.begin(), scratch.end(), 0);
    bool any = false;
    for (int k = 1; k <= plan.types(); ++k) {
        if (!plan.scheduled(k, t)) continue;
        any = true;
        const Mask& mask = impact_[k - 1];
        for (int w = 0; w < words_; ++w) scratch[w] |= mask[w];
    }
    if (!any) return 0;

    std::int64_t tenths = 0;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = scratch[w];
        while (bits) {
            const int bit = __builtin_ctzll(bits);
            tenths += object_tenths_[w * 64 + bit];
            bits &= bits - 1;
        }
    }
    return tenths;
}

Money CostEvaluator::f1(const SchedulePlan& plan) const {
    require_matching_dimensions(*instance_, plan);
    std::int64_t tenths = 0;
    for (int k = 1; k <= plan.types(); ++k)
        tenths += type_tenths_[k - 1] * plan.executions(k);
    return Money::from_tenths(tenths);
}

Money CostEvaluator::f2(const SchedulePlan& plan) const {
    require_matching_dimensions(*instance_, plan);
    Mask scratch(words_, 0);
    std::int64_t tenths = 0;
    for (int t = 1; t <= plan.horizon(); ++t) tenths += step_f2_tenths(plan, t, scratch);
    return Money::from_tenths(tenths);
}

std::int64_t CostEvaluator::total_tenths(const SchedulePlan& plan) const {
    return f1(plan).tenths() + f2(plan).tenths();
}

CostBreakdown CostEvaluator::total_cost(const SchedulePlan& plan) const {
    require_matching_dimensions(*instance_, plan);
    const ProblemInstance& inst = *instance_;

    std::map<std::string, OperatorCost> attribution;
    for (const auto& op : inst.operators()) attribution[op.id] = {};

    CostBreakdown breakdown;

    for (const auto& type : inst.intervention_types()) {
        const int executions = plan.executions(type.index);
        if (executions == 0) continue;
        const Money row_cost = type.cost * executions;
        breakdown.f1 += row_cost;
        const auto share_count = static_cast<std::int64_t>(type.responsible.size());
        const Money share = Money::from_tenths(type.cost.tenths() / share_count) * executions;
        for (const std::string& op : type.responsible) attribution[op].intervention += share;
    }

    Mask scratch(words_, 0);
    for (int t = 1; t <= plan.horizon(); ++t) {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (int k = 1; k <= plan.types(); ++k) {
            if (!plan.scheduled(k, t)) continue;
            const Mask& mask = impact_[k - 1];
            for (int w = 0; w < words_; ++w) scratch[w] |= mask[w];
        }
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = scratch[w];
            while (bits) {
                const int bit = __builtin_ctzll(bits);
                const NetworkObject& obj = inst.objects()[w * 64 + bit];
                breakdown.f2 += obj.unavailability_cost;
                attribution[obj.owner].unavailability += obj.unavailability_cost;
                bits &= bits - 1;
            }
        }
    }

    breakdown.total = breakdown.f1 + breakdown.f2;
    for (const auto& op : inst.operators())
        breakdown.per_operator.emplace_back(op.id, attribution[op.id]);
    return breakdown;
}

CumulativeSeries CostEvaluator::cumulative_series(const SchedulePlan& plan) const {
    require_matching_dimensions(*instance_, plan);
    CumulativeSeries series;
    Mask scratch(words_, 0);
    Money f1_running, f2_running;
    for (int t = 1; t <= plan.horizon(); ++t) {
        for (int k = 1; k <= plan.types(); ++k)
            if (plan.scheduled(k, t)) f1_running += instance_->intervention_type(k).cost;
        f2_running += Money::from_tenths(step_f2_tenths(plan, t, scratch));
        series.f1_cum.push_back(f1_running);
        series.f2_cum.push_back(f2_running);
        series.total_cum.push_back(f1_running + f2_running);
    }
    return series;
}

std::vector<std::string> CostEvaluator::affected_objects(const SchedulePlan& plan, int t) const {
    require_matching_dimensions(*instance_, plan);
    if (t < 1 || t > plan.horizon())
        throw std::out_of_range("time step " + std::to_string(t) + " outside [1, " +
                                std::to_string(plan.horizon()) + "]");
    Mask scratch(words_, 0);
    for (int k = 1; k <= plan.types(); ++k) {
        if (!plan.scheduled(k, t)) continue;
        const Mask& mask = impact_[k - 1];
        for (int w = 0; w < words_; ++w) scratch[w] |= mask[w];
    }
    std::vector<std::string> ids;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = scratch[w];
        while (bits) {
            const int bit = __builtin_ctzll(bits);
            ids.push_back(instance_->objects()[w * 64 + bit].id);
            bits &= bits - 1;
        }
    }
    return ids;
}

std::vector<std::string> affected_objects(const ProblemInstance& instance, const SchedulePlan& plan,
                                          int t) {
    return CostEvaluator(instance).affected_objects(plan, t);
}

Money intervention_cost(const ProblemInstance& instance, const SchedulePlan& plan) {
    return CostEvaluator(instance).f1(plan);
}

Money unavailability_cost(const ProblemInstance& instance, const SchedulePlan& plan) {
    return CostEvaluator(instance).f2(plan);
}

CostBreakdown total_cost(const ProblemInstance& instance, const SchedulePlan& plan) {
    return CostEvaluator(instance).total_cost(plan);
}

CumulativeSeries cumulative_series(const ProblemInstance& instance, const SchedulePlan& plan) {
    return CostEvaluator(instance).cumulative_series(plan);
}

} // namespace interplan
