// Regenerates tests/golden/den_local_q3.json from the element-set oracle.
#include <iostream>

#include "swkit/suites.hpp"

int main() {
    using swkit::Partition;
    const std::vector<Partition> parts{Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})};
    std::cout << swkit::den_local_table(3, {swkit::PlaceKind::Inert, swkit::PlaceKind::Split}, parts, true);
}
