// Copyright 2026 The qsac authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsac/architecture.hpp"

#include <cctype>
#include <sstream>

#include "qsac/errors.hpp"

namespace qsac::hybrid {

namespace {

constexpr int kMaxWidth = 65536;

struct Node {
    enum class Kind { width, vqa, group };
    Kind kind = Kind::width;
    int value = 0; // width, or VQA layer count
    std::vector<Node> kids;
};

class Lexer {
  public:
    explicit Lexer(const std::string &text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected an integer");
        }
        long v = std::stol(text_.substr(start, pos_ - start));
        if (v <= 0 || v > kMaxWidth) {
            fail("width out of range");
        }
        return static_cast<int>(v);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string &why) {
        std::ostringstream os;
        os << "architecture \"" << text_ << "\": " << why << " at offset "
           << pos_;
        throw ParseError(os.str());
    }

  private:
    const std::string &text_;
    std::size_t pos_ = 0;
};

Node parse_group(Lexer &lx);

Node parse_element(Lexer &lx) {
    const char c = lx.peek();
    if (c == '(') {
        return parse_group(lx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        Node n;
        n.kind = Node::Kind::width;
        n.value = lx.integer();
        return n;
    }
    const std::string word = lx.ident();
    if (word != "VQA") {
        lx.fail("unknown token \"" + word + "\"");
    }
    lx.expect('(');
    Node n;
    n.kind = Node::Kind::vqa;
    n.value = lx.integer();
    const std::string unit = lx.ident();
    if (unit != "layers" && unit != "layer") {
        lx.fail("expected \"layers\" after the VQA depth");
    }
    lx.expect(')');
    return n;
}

Node parse_group(Lexer &lx) {
    lx.expect('(');
    Node g;
    g.kind = Node::Kind::group;
    g.kids.push_back(parse_element(lx));
    while (lx.accept(',')) {
        g.kids.push_back(parse_element(lx));
    }
    lx.expect(')');
    return g;
}

struct Atom {
    enum class Kind { width, vqa, heads };
    Kind kind = Kind::width;
    int value = 0;
};

// Flattens top-level groups left to right. A width equal to the previous
// group's trailing width merges with it at the boundary. A nested group is
// only legal as the very last element (the actor head marker).
std::vector<Atom> flatten(const std::vector<Node> &groups, Lexer &lx) {
    std::vector<Atom> atoms;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const Node &g = groups[gi];
        for (std::size_t ei = 0; ei < g.kids.size(); ++ei) {
            const Node &e = g.kids[ei];
            switch (e.kind) {
            case Node::Kind::width: {
                const bool boundary = ei == 0 && gi > 0;
                if (boundary && !atoms.empty() &&
                    atoms.back().kind == Atom::Kind::width &&
                    atoms.back().value == e.value) {
                    break; // shared boundary width, one layer
                }
                atoms.push_back({Atom::Kind::width, e.value});
                break;
            }
            case Node::Kind::vqa:
                atoms.push_back({Atom::Kind::vqa, e.value});
                break;
            case Node::Kind::group: {
                const bool last =
                    gi + 1 == groups.size() && ei + 1 == g.kids.size();
                if (!last) {
                    lx.fail("a nested group is only allowed as the trailing "
                            "head marker");
                }
                for (const Node &k : e.kids) {
                    if (k.kind != Node::Kind::width) {
                        lx.fail("head marker may contain only widths");
                    }
                }
                atoms.push_back({Atom::Kind::heads, 0});
                break;
            }
            }
        }
    }
    return atoms;
}

} // namespace

NetworkPlan parse_architecture(const std::string &text, Role role,
                               int input_dim, int action_dim) {
    if (input_dim <= 0) {
        throw ConfigError("architecture input_dim must be positive");
    }
    if (role == Role::actor && action_dim <= 0) {
        throw ConfigError("actor architecture needs a positive action_dim");
    }

    Lexer lx(text);
    std::vector<Node> groups;
    if (lx.done()) {
        lx.fail("empty architecture");
    }
    while (!lx.done()) {
        groups.push_back(parse_group(lx));
    }
    std::vector<Atom> atoms = flatten(groups, lx);

    if (atoms.empty() || atoms.front().kind != Atom::Kind::width) {
        lx.fail("architecture must start with the input width");
    }
    if (atoms.front().value != input_dim) {
        std::ostringstream os;
        os << "architecture \"" << text << "\" declares input width "
           << atoms.front().value << " but the network is fed " << input_dim
           << " features";
        throw ConfigError(os.str());
    }

    NetworkPlan plan;
    plan.role = role;
    plan.input_dim = input_dim;
    plan.action_dim = role == Role::actor ? action_dim : 0;
    plan.source = text;

    // Split off the actor head marker: an explicit trailing (1,1) group, or
    // the trailing width token when no group is present.
    bool explicit_heads = false;
    if (role == Role::actor) {
        if (atoms.back().kind == Atom::Kind::heads) {
            atoms.pop_back();
            explicit_heads = true;
        } else if (atoms.size() >= 2 &&
                   atoms.back().kind == Atom::Kind::width) {
            atoms.pop_back();
            explicit_heads = true;
        }
        if (!explicit_heads || atoms.empty()) {
            lx.fail("actor architecture has no head marker");
        }
    }

    int current = input_dim;
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        const Atom &a = atoms[i];
        if (a.kind == Atom::Kind::vqa) {
            if (i != 1) {
                lx.fail("VQA is only supported directly after the input "
                        "width");
            }
            const int n_qubits = atoms.front().value;
            if (role == Role::critic) {
                // The critic keeps classical layers on both sides of the
                // circuit; project the features onto the qubits first.
                NetworkPlan::Item pre;
                pre.kind = NetworkPlan::Item::Kind::dense;
                pre.in_dim = current;
                pre.out_dim = n_qubits;
                pre.act = nn::Activation::linear;
                plan.items.push_back(pre);
            }
            NetworkPlan::Item item;
            item.kind = NetworkPlan::Item::Kind::vqc;
            item.circuit.n_qubits = n_qubits;
            item.circuit.n_layers = a.value;
            item.circuit.reupload = true;
            item.circuit.last_layer_yz_only = true;
            item.circuit.validate();
            item.in_dim = n_qubits;
            item.out_dim = n_qubits;
            plan.items.push_back(item);
            current = n_qubits;
            continue;
        }
        if (a.kind == Atom::Kind::heads) {
            lx.fail("head marker in a critic architecture");
        }
        NetworkPlan::Item item;
        item.kind = NetworkPlan::Item::Kind::dense;
        item.in_dim = current;
        item.out_dim = a.value;
        plan.items.push_back(item);
        current = a.value;
    }

    if (role == Role::critic) {
        if (plan.items.empty() ||
            plan.items.back().kind != NetworkPlan::Item::Kind::dense ||
            plan.items.back().out_dim != 1) {
            lx.fail("critic architecture must end in a width-1 output layer");
        }
    } else {
        plan.has_heads = true;
        plan.head_in_dim = current;
    }

    // Activation assignment. The published activation tuples are
    // (linear, relu, linear) for every actor and (linear, relu, relu,
    // linear) for every critic, which pair with layers as follows: actor
    // tuple entries map onto trunk stages in order (a VQC stage consumes the
    // "linear" slot) with the trailing entry on the heads; the critic tuple's
    // first entry is the input-side layer (the inserted projection when a
    // VQC is present, otherwise a placeholder), the last is the output
    // layer, and hidden layers take relu.
    if (role == Role::actor) {
        bool first_stage = true;
        for (auto &item : plan.items) {
            if (item.kind == NetworkPlan::Item::Kind::dense) {
                item.act = first_stage ? nn::Activation::linear
                                       : nn::Activation::relu;
            }
            first_stage = false;
        }
    } else {
        bool after_vqc = false;
        bool has_vqc = false;
        for (auto &item : plan.items) {
            if (item.kind == NetworkPlan::Item::Kind::vqc) {
                has_vqc = true;
            }
        }
        for (std::size_t i = 0; i < plan.items.size(); ++i) {
            auto &item = plan.items[i];
            if (item.kind == NetworkPlan::Item::Kind::vqc) {
                after_vqc = true;
                continue;
            }
            const bool is_output = i + 1 == plan.items.size();
            const bool is_projection = has_vqc && !after_vqc;
            if (is_output || is_projection) {
                item.act = nn::Activation::linear;
            } else {
                item.act = nn::Activation::relu;
            }
        }
    }
    return plan;
}

std::size_t parameter_count(const NetworkPlan &plan) {
    std::size_t total = 0;
    for (const auto &item : plan.items) {
        if (item.kind == NetworkPlan::Item::Kind::dense) {
            total += (static_cast<std::size_t>(item.in_dim) + 1) *
                     static_cast<std::size_t>(item.out_dim);
        } else {
            total += sim::CircuitParams::size(item.circuit);
        }
    }
    if (plan.has_heads) {
        total += 2 * (static_cast<std::size_t>(plan.head_in_dim) + 1) *
                 static_cast<std::size_t>(plan.action_dim);
    }
    return total;
}

std::size_t hidden_weight_count(const NetworkPlan &plan) {
    std::size_t total = 0;
    std::size_t last_dense = 0;
    bool any = false;
    for (const auto &item : plan.items) {
        if (item.kind != NetworkPlan::Item::Kind::dense) {
            continue;
        }
        const std::size_t w = static_cast<std::size_t>(item.in_dim) *
                              static_cast<std::size_t>(item.out_dim);
        total += w;
        last_dense = w;
        any = true;
    }
    if (any && !plan.has_heads) {
        total -= last_dense; // output layer excluded by the convention
    }
    return total;
}

std::string describe(const NetworkPlan &plan) {
    std::ostringstream os;
    bool first = true;
    for (const auto &item : plan.items) {
        if (!first) {
            os << " | ";
        }
        first = false;
        if (item.kind == NetworkPlan::Item::Kind::dense) {
            os << "dense " << item.in_dim << "->" << item.out_dim << " "
               << nn::activation_name(item.act);
        } else {
            os << "vqc " << item.circuit.n_qubits << "q x "
               << item.circuit.n_layers << " layers";
        }
    }
    if (plan.has_heads) {
        if (!first) {
            os << " | ";
        }
        os << "heads " << plan.head_in_dim << "->" << plan.action_dim << "x2";
    }
    return os.str();
}

} // namespace qsac::hybrid
