#include "sbp/limits.hpp"

#include <atomic>
#include <cstdlib>

namespace sbp {

namespace {
std::atomic<std::size_t> g_exact_override{0};
std::atomic<std::size_t> g_opt_override{0};

std::size_t env_exact_limit() {
    if (const char* v = std::getenv("SBP_EXACT_LIMIT")) {
        long n = std::strtol(v, nullptr, 10);
        if (n > 0) return static_cast<std::size_t>(n);
    }
    return Limits::kDefaultExact;
}
} // namespace

Limits Limits::current() {
    Limits l;
    std::size_t e = g_exact_override.load();
    l.exact_limit = e ? e : env_exact_limit();
    std::size_t o = g_opt_override.load();
    l.opt_limit = o ? o : kDefaultOpt;
    return l;
}

void Limits::set_exact_limit(std::size_t n) { g_exact_override.store(n); }
void Limits::set_opt_limit(std::size_t n) { g_opt_override.store(n); }

} // namespace sbp
