#include "monkey/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>

namespace monkey {
namespace {

constexpr std::size_t kDefaultBudget = std::size_t{2} * 1024 * 1024 * 1024;

std::atomic<std::size_t>& budget_slot() {
    static std::atomic<std::size_t> budget = [] {
        if (const char* env = std::getenv("MONKEY_MEM_BUDGET")) {
            char* end = nullptr;
            const unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0) {
                return static_cast<std::size_t>(parsed);
            }
        }
        return kDefaultBudget;
    }();
    return budget;
}

std::atomic<std::size_t> g_in_use{0};
std::atomic<std::size_t> g_peak{0};

void raise_peak(std::size_t candidate) {
    std::size_t seen = g_peak.load(std::memory_order_relaxed);
    while (candidate > seen &&
           !g_peak.compare_exchange_weak(seen, candidate, std::memory_order_relaxed)) {
    }
}

void reserve_bytes(std::size_t bytes, const char* what) {
    std::size_t seen = g_in_use.load(std::memory_order_relaxed);
    for (;;) {
        const std::size_t wanted = seen + bytes;
        if (wanted < seen || wanted > budget_slot().load(std::memory_order_relaxed)) {
            throw BudgetError(std::string(what) + ": memory budget of " +
                              std::to_string(budget_slot().load()) + " bytes exceeded (" +
                              std::to_string(seen) + " in use, " + std::to_string(bytes) +
                              " requested)");
        }
        if (g_in_use.compare_exchange_weak(seen, wanted, std::memory_order_relaxed)) {
            raise_peak(wanted);
            return;
        }
    }
}

} // namespace

std::size_t memory_budget() { return budget_slot().load(); }

void set_memory_budget(std::size_t bytes) { budget_slot().store(bytes); }

std::size_t memory_in_use() { return g_in_use.load(); }

std::size_t memory_peak() { return g_peak.load(); }

void reset_memory_peak() { g_peak.store(g_in_use.load()); }

MemoryReservation::MemoryReservation(std::size_t bytes, const char* what) {
    reserve_bytes(bytes, what);
    bytes_ = bytes;
}

MemoryReservation::MemoryReservation(MemoryReservation&& other) noexcept
    : bytes_(other.bytes_) {
    other.bytes_ = 0;
}

MemoryReservation& MemoryReservation::operator=(MemoryReservation&& other) noexcept {
    if (this != &other) {
        if (bytes_ != 0) g_in_use.fetch_sub(bytes_);
        bytes_ = other.bytes_;
        other.bytes_ = 0;
    }
    return *this;
}

MemoryReservation::~MemoryReservation() {
    if (bytes_ != 0) g_in_use.fetch_sub(bytes_);
}

void MemoryReservation::grow(std::size_t bytes, const char* what) {
    reserve_bytes(bytes, what);
    bytes_ += bytes;
}

} // namespace monkey
