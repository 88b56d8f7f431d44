#include "cctt/driver.hpp"

namespace cctt {

// Contractible fibers. The transport equivalence is what composition in the
// universe glues in; its inverse direction runs the line backwards.
const char* core_source() {
  return R"(
def %isContr (A : U) : U = (x : A) * ((y : A) -> Path A x y)

def %fiber (A B : U) (f : A -> B) (y : B) : U = (x : A) * Path B y (f x)

def %isEquiv (A B : U) (f : A -> B) : U = (y : B) -> %isContr (%fiber A B f y)

def %Equiv (A B : U) : U = (f : A -> B) * %isEquiv A B f

def %idIsEquiv (A : U) : %isEquiv A A (\x -> x) =
  \y -> ((y, <_> y), \v -> <i> (v.2 @ i, <j> v.2 @ (i /\ j)))

def %transpEquiv (A B : U) (E : Path U A B) : %Equiv B A =
  (\(y : B) -> comp (<i> E @ -i) [] y,
   comp (<j> %isEquiv (E @ j) A (\(y : E @ j) -> comp (<i> E @ (-i /\ j)) [(j = 0) -> <i> y] y))
     [] (%idIsEquiv A))
)";
}

}  // namespace cctt
