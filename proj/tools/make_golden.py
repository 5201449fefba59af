#!/usr/bin/env python3
# Regenerates tests/data/v1/worked_examples.json from the piecewise tables (needs sympy).
import json, sympy as sp
q=sp.Symbol('q')
def poly22(s):
    s=sp.Rational(s)
    if s<=1: e= s**3/3*q**3+s**2/2*q**2+s/6*q
    elif s<=2: e=(s**3/3-sp.Rational(4,3)*(s-1)**3)*q**3+(s**2/2-2*(s-1)**2)*q**2+(s/6-sp.Rational(2,3)*(s-1))*q
    else: e=sp.Rational(4,3)*q**3-sp.Rational(1,3)*q
    return e
def poly23(s):
    s=sp.Rational(s); R=sp.Rational
    if s<1: e=s**4/8*q**4+5*s**3/12*q**3+3*s**2/8*q**2+s/12*q
    elif s<2: e=(s**4/8-R(3,4)*(s-1)**4)*q**4+(5*s**3/12-R(5,2)*(s-1)**3)*q**3+(3*s**2/8-R(9,4)*(s-1)**2)*q**2+(s/12-R(1,2)*(s-1))*q
    elif s<3: e=(s**4/8-R(1,4)*(4*s**3-9*s**2+7))*q**4+(5*s**3/12-R(1,4)*(9*s**2-9*s-8))*q**3+(3*s**2/8-R(1,4)*(5*s-1))*q**2+(s/12-R(1,2))*q
    else: e=R(13,8)*q**4-R(1,4)*q**3-R(1,8)*q**2-R(1,4)*q
    return e
def coeffs(e):
    P=sp.Poly(sp.expand(e),q); c=P.all_coeffs()[::-1]
    return {"coeffs":[f"{sp.Rational(x).p}/{sp.Rational(x).q}" for x in c]}
ex=[]
A=ex.append
A({"id":"binom_upper_below_lower","kind":"binom","m":3,"n":5,"expected":"0"})
A({"id":"binom_negative_upper","kind":"binom","m":-2,"n":1,"expected":"0"})
A({"id":"eval_2x2_plateau_at_2","kind":"eval","poly":coeffs(poly22(3)),"q":2,"expected":"10"})
A({"id":"interpolate_2x2_plateau","kind":"interpolate","points":[[x,str(poly22(3).subs(q,x))] for x in (2,4,8,16)],"expected":coeffs(poly22(3))})
A({"id":"length_2x2_s3_q2","kind":"length","m":2,"n":2,"s":"3/1","q":2,"expected":"10"})
A({"id":"length_2x2_s1_q4","kind":"length","m":2,"n":2,"s":"1/1","q":4,"expected":str(poly22(1).subs(q,4))})
A({"id":"length_2x3_s3_q2","kind":"length","m":2,"n":3,"s":"3/1","q":2,"expected":str(poly23(3).subs(q,2))})
A({"id":"staircase_count_2x2","kind":"staircase_count","m":2,"n":2,"r":6,"q":2,"expected":"10"})
A({"id":"staircase_count_2x3","kind":"staircase_count","m":2,"n":3,"r":6,"q":2,"expected":"23"})
A({"id":"S_term_2x3_s3_q2","kind":"S_term","m":2,"n":3,"sq":6,"q":2,"expected":str(sp.expand(sp.Rational(1,8)*3**4*16+sp.Rational(5,12)*27*8+sp.Rational(3,8)*9*4+sp.Rational(1,12)*3*2)-23)})
A({"id":"R_term_2x2_s3_q2","kind":"R_term","m":2,"n":2,"sq":6,"q":2,"expected":str(sp.Rational(27,3)*8+sp.Rational(9,2)*4+sp.Rational(3,6)*2)})
for s in ["1/2","1/1","3/2","2/1","3/1"]:
    A({"id":f"fit_2x2_s{s.replace('/','_')}","kind":"fit","m":2,"n":2,"s":s,"p":2,"expected":coeffs(poly22(s))})
for s in ["1/2","3/2","5/2","3/1"]:
    A({"id":f"fit_2x3_s{s.replace('/','_')}","kind":"fit","m":2,"n":3,"s":s,"p":2,"expected":coeffs(poly23(s))})
A({"id":"h_s_2x2_s3","kind":"h_s","m":2,"n":2,"s":"3/1","p":2,"expected":"4/3"})
A({"id":"h_s_2x2_s1","kind":"h_s","m":2,"n":2,"s":"1/1","p":2,"expected":"1/3"})
A({"id":"h_s_2x3_s4","kind":"h_s","m":2,"n":3,"s":"4/1","p":2,"expected":"13/8"})
A({"id":"e_s_2x2_s3","kind":"e_s","m":2,"n":2,"s":"3/1","p":2,"expected":"4/3"})
A({"id":"e_s_2x3_s1_2","kind":"e_s","m":2,"n":3,"s":"1/2","p":2,"expected":"3/1"})
A({"id":"regular_length_e1","kind":"regular_length","d":2,"r":3,"q":2,"expected":"4"})
A({"id":"regular_length_e2","kind":"regular_length","d":2,"r":6,"q":4,"expected":"15"})
for e in range(1,11):
    Q=2**e
    v= sp.Rational(7,9)*Q*Q+(sp.Rational(5,9)*Q-sp.Rational(2,9) if e%2 else sp.Rational(7,9)*Q-sp.Rational(5,9))
    A({"id":f"nonpoly_4_3_e{e}","kind":"nonpoly","p":2,"s":"4/3","e":e,"expected":str(v)})
A({"id":"phi_worked_example","kind":"encode_chain","chain":"1r<2r<3r<4b<5r<5b<6b<7b<8b<9r<10r<10b<11b<12r<13b","c":15,
   "expected":{"w":4,"A":[3,4,6,7],"B":[1,2,6,8],"C":list(range(1,14))+[17,18]}})
A({"id":"psi_worked_example","kind":"decode_chain","code":{"w":2,"A":[3,5],"B":[1,2],"C":list(range(1,15))+[17]},"a":7,"b":8,"c":15,
   "expected":"1r<2r<3r<4b<5r<6r<6b<7b<8b<9b<10b<11b<12b<13r<14r"})
A({"id":"reduce_key_exchange","kind":"reduce","matrix":[[1,0],[0,1]],"expected":[[0,1],[1,0]]})
doc={"version":1,"examples":ex}
import pathlib
out = pathlib.Path(__file__).resolve().parent.parent / "tests/data/v1/worked_examples.json"
open(out,"w").write(json.dumps(doc,indent=1)+"\n")
print(len(ex))
