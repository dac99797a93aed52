#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monkey {

// Raised when an enumeration or sampling run would exceed the memory budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Process-wide accounting of large working-set allocations. The budget is a
// logical byte cap (default 2 GiB, overridable via MONKEY_MEM_BUDGET); callers
// reserve before allocating and the reservation is released via RAII.
std::size_t memory_budget();
void set_memory_budget(std::size_t bytes);
std::size_t memory_in_use();
std::size_t memory_peak();
void reset_memory_peak();

class MemoryReservation {
public:
    MemoryReservation() = default;
    explicit MemoryReservation(std::size_t bytes, const char* what);
    MemoryReservation(MemoryReservation&& other) noexcept;
    MemoryReservation& operator=(MemoryReservation&& other) noexcept;
    MemoryReservation(const MemoryReservation&) = delete;
    MemoryReservation& operator=(const MemoryReservation&) = delete;
    ~MemoryReservation();

    // Extends this reservation by `bytes`, failing like the constructor.
    void grow(std::size_t bytes, const char* what);
    std::size_t bytes() const { return bytes_; }

private:
    std::size_t bytes_ = 0;
};

} // namespace monkey
