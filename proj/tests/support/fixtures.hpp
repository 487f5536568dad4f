#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "argdial/aaf.hpp"

namespace fixtures {

using argdial::aaf::Aaf;
using argdial::aaf::Dialogue;
using argdial::aaf::Labelling;

// Two mutually attacking arguments that both attack a third, which attacks a
// fourth. Complete labellings: ({a,d},{b,c},{}), ({b,d},{a,c},{}) and the
// all-undecided one.
inline Aaf example1() {
    Aaf af;
    for (const char* name : {"a", "b", "c", "d"}) af.add_argument(name);
    af.add_attack("a", "b");
    af.add_attack("b", "a");
    af.add_attack("a", "c");
    af.add_attack("b", "c");
    af.add_attack("c", "d");
    return af;
}

inline Aaf two_cycle() {
    Aaf af;
    af.add_argument("a");
    af.add_argument("b");
    af.add_attack("a", "b");
    af.add_attack("b", "a");
    return af;
}

inline Aaf three_cycle() {
    Aaf af;
    for (const char* name : {"a", "b", "c"}) af.add_argument(name);
    af.add_attack("a", "b");
    af.add_attack("b", "c");
    af.add_attack("c", "a");
    return af;
}

inline Aaf self_attack() {
    Aaf af;
    af.add_argument("a");
    af.add_attack("a", "a");
    return af;
}

// a -> b -> c
inline Aaf chain3() {
    Aaf af;
    for (const char* name : {"a", "b", "c"}) af.add_argument(name);
    af.add_attack("a", "b");
    af.add_attack("b", "c");
    return af;
}

inline Labelling lab(const Aaf& af, std::vector<std::string> in, std::vector<std::string> out,
                     std::vector<std::string> undec) {
    return Labelling(af.arguments(), std::move(in), std::move(out), std::move(undec));
}

inline Dialogue dlg(std::initializer_list<std::pair<const char*, unsigned>> entries) {
    Dialogue d;
    for (const auto& [name, rank] : entries) d.add(name, rank);
    return d;
}

// One rank per argument, declaration order.
inline Dialogue sequential(const Aaf& af) {
    Dialogue d;
    for (int x = 0; x < af.size(); ++x) {
        d.add(af.argument(x), static_cast<unsigned>(x));
    }
    return d;
}

inline Dialogue simultaneous(const Aaf& af) {
    Dialogue d;
    for (int x = 0; x < af.size(); ++x) d.add(af.argument(x), 0);
    return d;
}

}  // namespace fixtures
