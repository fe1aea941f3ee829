#ifndef TWOCAT_FIXTURES_HPP
#define TWOCAT_FIXTURES_HPP

#include <functional>
#include <utility>

#include "twocat/monad.hpp"

// Bundled desk-scale fixtures.  Every worked example in the test suites is
// reproducible from these.

namespace twocat::fixtures {

// Finite poset with objects as given; morphisms "x<=y", identities "idx".
FinCategory make_poset(std::vector<std::string> objects,
                       const std::function<bool(int, int)>& leq);

CatPtr term();      // terminal category
CatPtr arrow2();    // walking arrow 0 -> 1
CatPtr pair_cat();  // two parallel arrows f, g : 0 -> 1
CatPtr chain3();    // chain 0 <= 1 <= 2
CatPtr sub2();      // chain 1 <= 2 (source of fix_incl)
CatPtr sq();        // subsets of {a,b}: e, a, b, ab
CatPtr bz2();       // group Z/2 as a one-object category, morphisms 1 and s

// Closure operator on a poset as a monad; components are forced.
Monad closure_monad(const CatPtr& poset, const std::function<int(int)>& close);

Monad clos_c();    // on chain3: 0,1 -> 1, 2 -> 2
Monad clos_top();  // on chain3: everything -> 2
Monad cA();        // on sq: x -> x + {a}
Monad cB();        // on sq: x -> x + {b}
Monad sgn();       // on bz2: identity endofunctor, unit = mult = s

FinFunctor fix_incl();  // sub2 into chain3

std::vector<std::pair<std::string, CatPtr>> all_categories();
std::vector<std::pair<std::string, Monad>> all_monads();

} // namespace twocat::fixtures

#endif
