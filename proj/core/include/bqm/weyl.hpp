#pragma once

// Extended affine Weyl groups of the rank-one root systems, as words in the
// simple reflections (plus the diagram automorphism u for the reduced type),
// and their canonical affine substitution actions on the variable.
//
// A word g1 g2 ... gl acts through the composed substitution
// m_{g1} o m_{g2} o ... o m_{gl}; the translation t(pi) = u s1 then sends
// x to q^{1/2} x and t(eps) = s0 s1 sends x to q x.

#include "bqm/laurent.hpp"
#include "bqm/params.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace bqm {

enum class Letter { s0, s1, u };

struct WeylWord {
    RootType type = RootType::A1;
    std::vector<Letter> letters;
};

struct weyl_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Substitution data of one generator letter; r2 counts powers of nu.
// base_sign = -1 realizes the same group with q replaced by 1/q (used by the
// spectral-variable representations).
inline Action letter_action(RootType type, Letter g, int base_sign = 1) {
    switch (g) {
        case Letter::s1:
            return {-1, 0};
        case Letter::s0:
            return {-1, 2 * base_sign};
        case Letter::u:
            if (type != RootType::A1) throw weyl_error("letter u is A1-only");
            return {-1, base_sign};
    }
    throw weyl_error("bad letter");
}

// The group element of a word in the display convention, where substitution
// expressions compose left to right (u s1 carries x -> q^{1/2} x).
inline Action word_action(const WeylWord& w, int base_sign = 1) {
    Action a = Action::id();
    for (Letter g : w.letters) a = Action::display_then(a, letter_action(w.type, g, base_sign));
    return a;
}

// The substitution carried by the word as an operator product of the letter
// substitutions (rightmost letter applied to the argument first).
inline Action word_op_action(const WeylWord& w, int base_sign = 1) {
    Action a = Action::id();
    for (Letter g : w.letters) a = Action::then(a, letter_action(w.type, g, base_sign));
    return a;
}

// Length function and canonical action by 0-1 BFS over group elements with
// translation degree bounded by l_max; u costs 0, s-letters cost 1.
struct ReducedElement {
    Action action;
    int length = 0;
};

inline ReducedElement weyl_reduce(const WeylWord& w, int l_max = 16) {
    Action target = word_action(w);
    const int bound = 2 * l_max + 2;
    if (std::abs(target.r2) > bound)
        throw weyl_error("translation degree exceeds the configured bound");

    std::vector<Letter> gens = {Letter::s0, Letter::s1};
    if (w.type == RootType::A1) gens.push_back(Letter::u);
    std::map<Action, int> dist;
    std::deque<Action> queue;
    dist[Action::id()] = 0;
    queue.push_back(Action::id());
    while (!queue.empty()) {
        Action a = queue.front();
        queue.pop_front();
        int d = dist[a];
        if (a == target) return {a, d};
        for (Letter g : gens) {
            Action b = Action::display_then(a, letter_action(w.type, g));
            if (std::abs(b.r2) > bound) continue;
            int cost = (g == Letter::u) ? 0 : 1;
            auto it = dist.find(b);
            if (it == dist.end() || it->second > d + cost) {
                dist[b] = d + cost;
                if (cost == 0)
                    queue.push_front(b);
                else
                    queue.push_back(b);
            }
        }
    }
    throw weyl_error("element not reached within the translation bound");
}

// A reduced word for t(l * lattice generator) in the x-copy conventions:
// A1 lattice generator pi (words in u, s1), CC generator eps (words in s0, s1).
inline WeylWord translation_word(RootType type, int l) {
    WeylWord w{type, {}};
    if (type == RootType::A1) {
        // t(pi) = u s1, t(-pi) = s1 u
        for (int i = 0; i < std::abs(l); ++i) {
            if (l > 0) {
                w.letters.push_back(Letter::u);
                w.letters.push_back(Letter::s1);
            } else {
                w.letters.push_back(Letter::s1);
                w.letters.push_back(Letter::u);
            }
        }
    } else {
        // t(eps) = s0 s1, t(-eps) = s1 s0
        for (int i = 0; i < std::abs(l); ++i) {
            if (l > 0) {
                w.letters.push_back(Letter::s0);
                w.letters.push_back(Letter::s1);
            } else {
                w.letters.push_back(Letter::s1);
                w.letters.push_back(Letter::s0);
            }
        }
    }
    return w;
}

}  // namespace bqm
