#include "partprod/enumerate.hpp"

#include <stdexcept>

namespace partprod {

PartitionEnumerator::PartitionEnumerator(int n) {
    if (n < 0) throw std::domain_error("cannot enumerate partitions of a negative integer");
    current_ = n == 0 ? Partition{} : Partition(Partition::Trusted{}, std::vector<int>{n}, n);
}

bool PartitionEnumerator::advance() {
    if (done_) return false;
    auto& a = current_.parts_;
    // Rightmost part greater than 1; everything after it is 1's.
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == 1) --k;
    if (k == 0) {
        done_ = true;
        return false;
    }
    --k;
    const int v = a[k] - 1;
    int rest = static_cast<int>(a.size() - k - 1) + 1;  // the trailing 1's plus the unit taken from a[k]
    a[k] = v;
    a.resize(k + 1);
    while (rest > v) {
        a.push_back(v);
        rest -= v;
    }
    if (rest > 0) a.push_back(rest);
    return true;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for (const Partition& mu : enumerate_partitions(n)) out.push_back(mu);
    return out;
}

}  // namespace partprod
