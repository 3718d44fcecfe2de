#include "mdl/gmp_pool.hpp"

#include <gmp.h>

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <new>

namespace mdl {

namespace {

constexpr std::size_t block_size = 64;
constexpr std::size_t max_cached = 1 << 14;

struct Block {
    Block* next;
};

thread_local Block* free_list = nullptr;
thread_local std::size_t cached = 0;
thread_local bool thread_exiting = false;

struct Drain {
    ~Drain() {
        thread_exiting = true;
        while (free_list != nullptr) {
            Block* b = free_list;
            free_list = b->next;
            std::free(b);
        }
        cached = 0;
    }
    void touch() {}
};
thread_local Drain drain;

void* checked(void* p) {
    if (p == nullptr)
        throw std::bad_alloc();
    return p;
}

void* pool_alloc(std::size_t n) {
    if (n > block_size)
        return checked(std::malloc(n));
    if (free_list != nullptr) {
        Block* b = free_list;
        free_list = b->next;
        --cached;
        return b;
    }
    if (!thread_exiting)
        drain.touch();
    return checked(std::malloc(block_size));
}

void pool_free(void* p, std::size_t n) {
    if (n > block_size || thread_exiting || cached >= max_cached) {
        std::free(p);
        return;
    }
    auto* b = static_cast<Block*>(p);
    b->next = free_list;
    free_list = b;
    ++cached;
}

void* pool_realloc(void* p, std::size_t old_size, std::size_t new_size) {
    if (old_size <= block_size && new_size <= block_size)
        return p;
    if (old_size > block_size && new_size > block_size)
        return checked(std::realloc(p, new_size));
    void* q = pool_alloc(new_size);
    std::memcpy(q, p, old_size < new_size ? old_size : new_size);
    pool_free(p, old_size);
    return q;
}

std::atomic<bool> installed{false};

}  // namespace

void install_gmp_pool() {
    if (!installed.exchange(true))
        mp_set_memory_functions(pool_alloc, pool_realloc, pool_free);
}

}  // namespace mdl
