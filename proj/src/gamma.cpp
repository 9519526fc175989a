#include "aspdbg/metaprogram.hpp"

namespace aspdbg {

namespace {

// Guess and check modules are the standard saturation encoding; aux modules are
// reconstructions, validated only by cross-checking against the explainer.
const std::vector<GammaModule> kGamma = {
    {"UNSAT_guess", R"asp(guessRule(R) | nguessRule(R) :- rule(R).
someRule :- guessRule(R).
:- not someRule, rule(R).
:- guessRule(R1), guessRule(R2), R1 != R2.
subst(X,C) | nsubst(X,C) :- guessRule(R), var(R,X), dom(C).
assigned(X) :- subst(X,C).
:- not assigned(X), guessRule(R), var(R,X).
:- subst(X,C1), subst(X,C2), C1 != C2.
)asp"},
    {"UNSAT_check", R"asp(unsatisfied :- satBody, not satHead.
satBody :- not unsatPosbody, not unsatNegbody.
satHead :- guessRule(R), head(R,A), true(A).
unsatPosbody :- guessRule(R), posbody(R,A), false(A).
unsatNegbody :- guessRule(R), negbody(R,A), true(A).
)asp"},
    {"UNSAT_aux", R"asp(unsatPosbody :- not someRule.
someDom :- dom(C).
assigned(X) :- variable(X), not someDom.
unsatPosbody :- guessRule(R), var(R,X), not someDom.
binding(u,X,C) :- subst(X,C).
ruleLit(R,L) :- head(R,L).
ruleLit(R,L) :- posbody(R,L).
ruleLit(R,L) :- negbody(R,L).
true(L) :- guessRule(R), ruleLit(R,L), classical(L), matches(u,L,A).
false(L) :- guessRule(R), ruleLit(R,L), classical(L), not true(L).
true(B) :- guessRule(R), posbody(R,B), builtinTrue(u,B).
false(B) :- guessRule(R), posbody(R,B), builtinFalse(u,B).

% Shared auxiliaries. A context is u (the UNSAT guess), s (the SUPPORT
% guess) or a rule slot N of the LOOP guess; binding/3 gives its substitution.
ctx(u).
ctx(s).
progLit(L) :- ruleLit(R,L).
cmpOp(b_eq). cmpOp(b_neq). cmpOp(b_leq). cmpOp(b_lt). cmpOp(b_geq). cmpOp(b_gt).
builtin(B) :- progLit(B), pred(B,O), cmpOp(O).
classical(L) :- progLit(L), not builtin(L).
term(L) :- progLit(L).
term(E) :- arith(E,O).
argVal(X,L,I,C) :- ctx(X), term(L), struct(L,I,const,C).
argVal(X,L,I,C) :- term(L), struct(L,I,var,V), binding(X,V,C).
argVal(X,L,I,C) :- term(L), struct(L,I,expr,E), exprVal(X,E,C).
exprVal(X,E,C) :- arith(E,plus), argVal(X,E,1,A), argVal(X,E,2,B), plus(A,B,C).
exprVal(X,E,C) :- arith(E,times), argVal(X,E,1,A), argVal(X,E,2,B), times(A,B,C).
exprUndef(X,E) :- arith(E,plus), argVal(X,E,1,A), argVal(X,E,2,B), not plus(A,B,_).
exprUndef(X,E) :- arith(E,times), argVal(X,E,1,A), argVal(X,E,2,B), not times(A,B,_).
builtinTrue(X,B) :- builtin(B), pred(B,O), argVal(X,B,1,C1), argVal(X,B,2,C2), cmp(O,C1,C2).
builtinFalse(X,B) :- builtin(B), pred(B,O), argVal(X,B,1,C1), argVal(X,B,2,C2), not cmp(O,C1,C2).
builtinFalse(X,B) :- builtin(B), struct(B,I,expr,E), exprUndef(X,E).
intVal(A,I,C) :- int(A), struct(A,I,const,C).
matchPos(X,L,A,0) :- ctx(X), classical(L), int(A), pred(L,T), pred(A,T).
matchPos(X,L,A,I) :- matchPos(X,L,A,J), I = J+1, argVal(X,L,I,C), intVal(A,I,C).
matches(X,L,A) :- matchPos(X,L,A,K), pred(L,T), arity(T,K).
differs(X,L,A) :- ctx(X), classical(L), int(A), pred(L,T1), pred(A,T2), T1 != T2.
differs(X,L,A) :- classical(L), argVal(X,L,I,C), intVal(A,I,D), C != D.
inI(X,L) :- matches(X,L,A).
% Order over I; notInI/notInJ walk it so that they stay positive in binding/3.
succI(A,B) :- int(A), int(B), A < B, not intBetween(A,B).
intBetween(A,B) :- int(A), int(B), int(C), A < C, C < B.
firstI(A) :- int(A), not hasPrevI(A).
hasPrevI(B) :- succI(A,B).
lastI(A) :- int(A), not hasNextI(A).
hasNextI(A) :- succI(A,B).
someInt :- int(A).
missI(X,L,A) :- firstI(A), differs(X,L,A).
missI(X,L,B) :- succI(A,B), missI(X,L,A), differs(X,L,B).
notInI(X,L) :- lastI(A), missI(X,L,A).
notInI(X,L) :- ctx(X), classical(L), not someInt.
outJ(X,L,A) :- differs(X,L,A).
outJ(X,L,A) :- ctx(X), classical(L), int(A), not inLoop(A).
missJ(X,L,A) :- firstI(A), outJ(X,L,A).
missJ(X,L,B) :- succI(A,B), missJ(X,L,A), outJ(X,L,B).
notInJ(X,L) :- lastI(A), missJ(X,L,A).
notInJ(X,L) :- ctx(X), classical(L), not someInt.
)asp"},
    {"LOOP_guess", R"asp(inLoop(X) | outLoop(X) :- int(X).
someInLoop :- inLoop(X).
:- not someInLoop, int(X).
)asp"},
    {"LOOP_check", R"asp(inRuleSet(N,R) | outRuleSet(N,R) :- 1 <= N, N <= S, loopSz(S), rule(R), natNumber(N).
someRule(N) :- inRuleSet(N,R).
:- not someRule(N), 1 <= N, N <= S, loopSz(S), rule(R), natNumber(N).
:- inRuleSet(N,R1), inRuleSet(N,R2), R1 != R2.
:- inRuleSet(N1,R1), inRuleSet(N2,R2), N1 <= N2, R1 > R2.
loopSubst(N,X,C) | nloopSubst(N,X,C) :- var(R,X), dom(C), inRuleSet(N,R).
loopAssigned(N,X) :- loopSubst(N,X,C).
:- not loopAssigned(N,X), inRuleSet(N,R), var(R,X).
:- loopSubst(N,X,C1), loopSubst(N,X,C2), C1 != C2.
isLoop :- not unreachablePair, inLoop(X).
unreachablePair :- inLoop(X), inLoop(Y), not path(X,Y).
path(X,X) :- inLoop(X).
path(X,Y) :- inLoop(X), inLoop(Y), pred(X,T1), pred(Y,T2), loopSz(S), 1 <= N, N <= S,
             head(R,H), inRuleSet(N,R), posbody(R,B), pred(H,T1), pred(B,T2),
             not differSeq(N,X,H), not differSeq(N,Y,B).
path(X,Z) :- inLoop(X), inLoop(Z), path(X,Y), path(Y,Z).
)asp"},
    {"LOOP_aux", R"asp(% A strongly connected set of k literals needs at most 2(k-1) edges, each
% contributed by one rule instance.
loopCount(A,1) :- firstI(A), inLoop(A).
loopCount(A,0) :- firstI(A), outLoop(A).
loopCount(B,K+1) :- succI(A,B), loopCount(A,K), inLoop(B).
loopCount(B,K) :- succI(A,B), loopCount(A,K), outLoop(B).
loopSz(S) :- lastI(A), loopCount(A,K), K >= 1, S = 2*(K-1).
natNumber(N) :- natNumber(K), natNumber(M), N = K+M, loopSz(S), N <= S.
ctx(N) :- loopSz(S), natNumber(N), 1 <= N, N <= S.
binding(N,X,C) :- loopSubst(N,X,C).
differSeq(N,A,L) :- differs(N,L,A), ctx(N).
:- inRuleSet(N,R), posbody(R,B), builtinFalse(N,B).
)asp"},
    {"SUPPORT_guess", R"asp(variable(X) :- var(R,X).
suppSubst(X,C) | nsuppSubst(X,C) :- variable(X), dom(C).
saturate :- suppSubst(X,C1), suppSubst(X,C2), C1 != C2.
saturate :- unassigned(X).
unass(X,C) :- first(C), nsuppSubst(X,C).
unass(X,C2) :- succ(C1,C2), unass(X,C1), nsuppSubst(X,C2).
unassigned(X) :- last(C), unass(X,C).
)asp"},
    {"SUPPORT_check", R"asp(unfounded :- unsupp(R), lastR(R).
unsupp(R) :- firstR(R), unsuppRule(R).
unsupp(R2) :- succR(R1,R2), unsupp(R1), unsuppRule(R2).
saturate :- unfounded.
suppSubst(X,C) :- variable(X), dom(C), saturate.
nsuppSubst(X,C) :- variable(X), dom(C), saturate.
unsuppRule(R) :- c1(R).
unsuppRule(R) :- c2(R).
unsuppRule(R) :- c3(R).
unsuppRule(R) :- c4(R).
unsuppRule(R) :- c5(R).
)asp"},
    {"SUPPORT_aux", R"asp(% Orders over constants, rules and program literal labels.
succ(C1,C2) :- dom(C1), dom(C2), C1 < C2, not domBetween(C1,C2).
domBetween(C1,C2) :- dom(C1), dom(C2), dom(C3), C1 < C3, C3 < C2.
first(C) :- dom(C), not hasPrev(C).
hasPrev(C2) :- succ(C1,C2).
last(C) :- dom(C), not hasNext(C).
hasNext(C1) :- succ(C1,C2).
succR(R1,R2) :- rule(R1), rule(R2), R1 < R2, not ruleBetween(R1,R2).
ruleBetween(R1,R2) :- rule(R1), rule(R2), rule(R3), R1 < R3, R3 < R2.
firstR(R) :- rule(R), not hasPrevR(R).
hasPrevR(R2) :- succR(R1,R2).
lastR(R) :- rule(R), not hasNextR(R).
hasNextR(R1) :- succR(R1,R2).
succL(L1,L2) :- progLit(L1), progLit(L2), L1 < L2, not litBetween(L1,L2).
litBetween(L1,L2) :- progLit(L1), progLit(L2), progLit(L3), L1 < L3, L3 < L2.
firstL(L) :- progLit(L), not hasPrevL(L).
hasPrevL(L2) :- succL(L1,L2).
lastL(L) :- progLit(L), not hasNextL(L).
hasNextL(L1) :- succL(L1,L2).
hasRule :- rule(R).
unfounded :- not hasRule.
binding(s,X,C) :- suppSubst(X,C).
% (i) positive body false or negative body true
c1(R) :- posbody(R,B), classical(B), notInI(s,B).
c1(R) :- posbody(R,B), builtinFalse(s,B).
c1(R) :- rule(R), var(R,X), not someDom.
c2(R) :- negbody(R,B), inI(s,B).
% (ii) no head literal in J
okHead(R,L) :- rule(R), progLit(L), not head(R,L).
okHead(R,L) :- head(R,L), notInJ(s,L).
headsOut(R,L) :- firstL(L), okHead(R,L).
headsOut(R,L2) :- succL(L1,L2), headsOut(R,L1), okHead(R,L2).
c3(R) :- lastL(L), headsOut(R,L).
% (iii) a head literal outside J is true
c4(R) :- head(R,H), matches(s,H,A), not inLoop(A).
% (iv) positive body meets J
c5(R) :- posbody(R,B), matches(s,B,A), inLoop(A).
)asp"},
    {"CONS", R"asp(notAnswerSet :- unsatisfied.
notAnswerSet :- isLoop, unfounded.
:- not notAnswerSet.
)asp"},
};

}  // namespace

const std::vector<GammaModule>& gamma() { return kGamma; }

std::string gamma_text() {
  std::string out;
  for (const auto& m : kGamma) {
    if (!out.empty()) out += '\n';
    out += "% " + m.name + "\n" + m.text;
  }
  return out;
}

}  // namespace aspdbg
