/* SPDX-License-Identifier: Apache-2.0 */

#include "core/kepler.hpp"

#include "core/sequence.hpp"

#include <json.hpp>

namespace ratseq {

KeplerNode kepler_root() {
    return KeplerNode{Natural(3), PositiveRational(1, 2), 0};
}

std::pair<KeplerNode, KeplerNode> kepler_children(const KeplerNode& node) {
    const Natural& x = node.value.num();
    const Natural& y = node.value.den();
    Natural s = x + y;
    return {KeplerNode{2 * node.index - 1, PositiveRational(x, s), node.depth + 1},
            KeplerNode{2 * node.index + 1, PositiveRational(y, s), node.depth + 1}};
}

std::vector<KeplerNode> kepler_level(unsigned depth) {
    std::vector<KeplerNode> level{kepler_root()};
    for (unsigned d = 0; d < depth; ++d) {
        std::vector<KeplerNode> next;
        next.reserve(level.size() * 2);
        for (const KeplerNode& node : level) {
            auto [left, right] = kepler_children(node);
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
        level = std::move(next);
    }
    return level;
}

std::vector<PositiveRational> kepler_right_edge(std::size_t count) {
    std::vector<PositiveRational> out;
    out.reserve(count);
    Natural index = 3;  // 2^2 - 1
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(eval_index(index));
        index = 2 * index + 1;
    }
    return out;
}

namespace {

std::string node_label(const KeplerNode& node) {
    return "a_" + node.index.str() + " = " + node.value.str();
}

}  // namespace

std::string kepler_to_dot(unsigned max_depth) {
    std::string nodes;
    std::string edges;
    std::vector<KeplerNode> level{kepler_root()};
    for (unsigned d = 0;; ++d) {
        std::vector<KeplerNode> next;
        for (const KeplerNode& node : level) {
            nodes += "  n" + node.index.str() + " [label=\"" + node_label(node) +
                     "\"];\n";
            if (d == max_depth)
                continue;
            auto [left, right] = kepler_children(node);
            edges += "  n" + node.index.str() + " -> n" + left.index.str() + ";\n";
            edges += "  n" + node.index.str() + " -> n" + right.index.str() + ";\n";
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
        if (d == max_depth)
            break;
        level = std::move(next);
    }
    return "digraph kepler {\n" + nodes + edges + "}\n";
}

namespace {

nlohmann::ordered_json node_json(const KeplerNode& node, unsigned max_depth) {
    nlohmann::ordered_json j;
    j["index"] = node.index.convert_to<std::uint64_t>();
    j["value"] = node.value.str();
    j["children"] = nlohmann::ordered_json::array();
    if (node.depth < max_depth) {
        auto [left, right] = kepler_children(node);
        j["children"].push_back(node_json(left, max_depth));
        j["children"].push_back(node_json(right, max_depth));
    }
    return j;
}

void node_text(const KeplerNode& node, unsigned max_depth, std::string& out) {
    out.append(2 * node.depth, ' ');
    out += node_label(node);
    out += '\n';
    if (node.depth < max_depth) {
        auto [left, right] = kepler_children(node);
        node_text(left, max_depth, out);
        node_text(right, max_depth, out);
    }
}

}  // namespace

std::string kepler_to_json(unsigned max_depth) {
    return node_json(kepler_root(), max_depth).dump(2) + "\n";
}

std::string kepler_to_text(unsigned max_depth) {
    std::string out;
    node_text(kepler_root(), max_depth, out);
    return out;
}

}  // namespace ratseq
