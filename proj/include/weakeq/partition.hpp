#pragma once

#include <vector>

#include "weakeq/errors.hpp"

namespace weakeq {

/// Labeling of atoms into k classes (empty classes allowed).
struct Partition {
    std::vector<int> labels;
    int class_count = 1;

    Partition() = default;
    Partition(std::vector<int> labels_, int class_count_)
        : labels(std::move(labels_)), class_count(class_count_) {
        for (int l : labels)
            if (l < 0 || l >= class_count) throw input_error("partition label out of range");
        if (class_count < 1) throw input_error("partition needs at least one class");
    }

    bool operator==(const Partition& o) const {
        return class_count == o.class_count && labels == o.labels;
    }
};

} // namespace weakeq
