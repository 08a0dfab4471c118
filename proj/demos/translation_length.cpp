// raagkit demo: exact asymptotic translation lengths on the extension graph.
//
// Builds a small girth-6 graph, classifies a few elements, and prints exact
// translation lengths with their certificates.  Run it from the build tree:
//
//     ./demo_translation_length
//
// Distributed under the MIT license; see LICENSE at the repository root.

#include <iostream>

#include "raag/graph.hpp"
#include "raag/serialize.hpp"
#include "raag/translation.hpp"
#include "raag/word.hpp"

int main() {
  using namespace raag;

  SimplicialGraph g = make_gamma(2);
  std::cout << "defining graph (gamma:2): " << g.n() << " vertices, girth "
            << g.metrics().girth.str() << "\n\n";

  for (const char* text : {"u v^-1 u", "t v u", "v u"}) {
    Element x = Element::parse(g, text);
    Classification cls = classify(x);
    std::cout << "g = " << x.str() << "  ("
              << (cls.loxodromic ? "loxodromic" : "elliptic") << ")\n";
    TauResult t = tau(x);
    std::cout << "  tau = " << t.value.str() << "  ["
              << tau_method_name(t.method)
              << (t.exact ? ", exact" : ", upper bound") << "]\n";
    std::cout << tau_to_json(t).dump(2) << "\n\n";
  }
  return 0;
}
