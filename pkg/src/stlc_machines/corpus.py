"""Hand-written terms: identity chains, combinators at concrete types,
Church encodings and nested redexes.  All are closed and of arrow type."""

T = "o->o"
A = "(o->o)->o->o"
N = f"({A})->{A}"  # Church numerals over o->o

CORPUS = [
    r"\x:o. x",
    r"(\x:o->o. x) (\y:o. y)",
    r"(\f:(o->o)->o->o. f) (\g:o->o. g) (\z:o. z)",
    r"(\x:o->o. \y:o->o. x) (\a:o. a) (\b:o. b)",
    r"(\x:o->o. \y:o. x) (\a:o. a)",
    r"(\x:(o->o)->(o->o)->o->o. \y:(o->o)->o->o. \z:o->o. x z (y z)) (\a:o->o. \b:o->o. a) (\c:o->o. c) (\d:o. d)",
    r"(\n:(o->o)->o->o. n) (\f:o->o. \x:o. f (f x))",
    r"(\f:o->o. \x:o. f (f x)) (\y:o. y)",
    r"(\f:(o->o)->o->o. \x:o->o. f (f x)) (\g:o->o. g) (\y:o. y)",
    r"(\x:o->o. x) ((\y:o->o. y) (\z:o. z))",
    r"(\a:o->o. a) ((\b:o->o. b) ((\c:o->o. c) (\d:o. d)))",
    r"(\f:o->o. f) ((\g:o->o. \x:o. g x) (\y:o. y))",
    r"(\f:(o->o)->(o->o)->o->o. \a:o->o. \b:o->o. f b a) (\p:o->o. \q:o->o. p) (\u:o. u) (\v:o. v)",
    r"(\f:(o->o)->o->o. \g:(o->o)->o->o. \x:o->o. f (g x)) (\h:o->o. h) (\k:o->o. k) (\y:o. y)",
    r"(\x:o->o. \y:o. y) ((\f:o->o. f) (\z:o. z))",
    r"(\a:o->o. \b:o->o. \c:o->o. \d:o->o. d) (\x:o. x) (\x:o. x) (\x:o. x) (\x:o. x)",
    r"(\f:(o->o)->o->o. f (f (\x:o. x))) (\g:o->o. g)",
    # 2 ^ 2 over o->o, applied to the identity twice
    rf"(\f:({A})->{A}. \x:{A}. f (f x)) (\f:({T})->{T}. \x:{T}. f (f x)) (\g:{T}. g) (\y:o. y)",
    # 2 + 2
    rf"(\m:{N}. \n:{N}. \f:({T})->{T}. \x:{T}. m f (n f x))"
    rf" (\f:({T})->{T}. \x:{T}. f (f x)) (\f:({T})->{T}. \x:{T}. f (f x)) (\g:{T}. g) (\y:o. y)",
    # 2 * 3
    rf"(\m:{N}. \n:{N}. \f:({T})->{T}. m (n f))"
    rf" (\f:({T})->{T}. \x:{T}. f (f x)) (\f:({T})->{T}. \x:{T}. f (f (f x))) (\g:{T}. g) (\y:o. y)",
    # first projection of a Church pair
    r"(\p:((o->o)->(o->o)->o->o)->o->o. p (\x:o->o. \y:o->o. x))"
    r" ((\a:o->o. \b:o->o. \s:(o->o)->(o->o)->o->o. s a b) (\u:o. u) (\v:o. v))",
    r"(\x:o->o. \y:o. x ((\z:o->o. z) x y)) (\w:o. w)",
    r"(\k:(o->o)->(o->o)->o->o. k (k (\a:o. a) (\b:o. b)) (\c:o. c)) (\p:o->o. \q:o->o. p)",
    r"(\x:o->o. (\y:o->o. (\z:o->o. z) y) x) (\u:o. u)",
]
