//! Evaluation of checked expressions on the adapted coframe.

use gwistor::{AltForm, CharacteristicConnection, Error, LeviCivita, NamedFormCatalog, Scalar};

use crate::expr::{Expr, Func};

pub struct Evaluator {
    k: Scalar,
    lc: LeviCivita,
    catalog: NamedFormCatalog,
}

impl Evaluator {
    /// `k = None` keeps `k` symbolic.
    pub fn new(k: Option<Scalar>) -> Self {
        let k = k.unwrap_or_else(Scalar::k);
        Evaluator {
            lc: LeviCivita::constant_k(k.clone()),
            k,
            catalog: NamedFormCatalog::new(),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<AltForm, Error> {
        Ok(match e {
            Expr::Num(q) => AltForm::scalar(q.clone()),
            Expr::Ident(name) => self.ident(name)?,
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Add(a, b) => self.eval(a)? + self.eval(b)?,
            Expr::Sub(a, b) => self.eval(a)? - self.eval(b)?,
            Expr::Wedge(a, b) | Expr::Mul(a, b) => self.eval(a)?.wedge(&self.eval(b)?),
            Expr::Call(f, args) => self.call(*f, args)?,
        })
    }

    fn ident(&self, name: &str) -> Result<AltForm, Error> {
        if name == "k" {
            return Ok(AltForm::scalar(self.k.clone()));
        }
        if let Some(i) = name.strip_prefix('e').and_then(|d| d.parse::<usize>().ok()) {
            if i < 7 {
                return Ok(AltForm::covector(i));
            }
        }
        self.catalog.get(name).cloned()
    }

    fn call(&self, f: Func, args: &[Expr]) -> Result<AltForm, Error> {
        let last = self.eval(args.last().expect("checked arity"))?;
        match f {
            Func::Star => Ok(last.hodge()),
            Func::D => self.lc.ext_d(&last),
            Func::Delta => self.lc.codiff(&last),
            Func::Inner => Ok(AltForm::scalar(self.eval(&args[0])?.inner(&last))),
            Func::Ip => Ok(last.interior(&self.eval(&args[0])?.sharp()?)),
            Func::NablaG => self.lc.nabla_along(&self.eval(&args[0])?.sharp()?, &last),
            Func::NablaCh => {
                let ch = CharacteristicConnection::new(self.lc.clone())?;
                let x = self.eval(&args[0])?.sharp()?;
                let mut out = AltForm::zero();
                for a in 0..7 {
                    let c = x.component(a);
                    if !c.is_zero() {
                        out += ch.nabla(a, &last)?.scale(c);
                    }
                }
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn run(s: &str, k: Option<Scalar>) -> AltForm {
        Evaluator::new(k).eval(&parse(s).unwrap().0).unwrap()
    }

    #[test]
    fn dmu_display_difference_vanishes() {
        assert!(run("d(mu) - (e4^e1 + e5^e2 + e6^e3)", None).is_zero());
    }

    #[test]
    fn star_d_phi_at_one() {
        let lc = LeviCivita::constant_k(Scalar::one());
        let c = NamedFormCatalog::new();
        assert_eq!(run("star(d(phi))", Some(Scalar::one())), lc.ext_d(&c.phi).unwrap().hodge());
    }

    #[test]
    fn calls() {
        assert_eq!(run("inner(phi, phi)", None), AltForm::scalar(Scalar::from(7)));
        assert_eq!(run("ip(e4, e4 ^ e5)", None), AltForm::covector(5));
        assert!(run("nabla_ch(e4, phi)", None).is_zero());
        assert!(run("nabla_g(e0, mu)", None).is_zero());
        assert_eq!(run("k * mu", Some(Scalar::ratio(1, 3))), AltForm::covector(0).scale(&Scalar::ratio(1, 3)));
    }
}
