"""Проверка флагов подкоманд и сборка RunConfig."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from django import forms
from django.conf import settings

from arith import MAX_MODULUS, is_prime, validate_modulus
from core.exceptions import LabError
from hecke import FormMeta
from qseries import read_series


@dataclass(frozen=True)
class RunConfig:
    """Параметры одного запуска подкоманды."""

    subcommand: str
    modulus: Optional[int] = None
    xmax: Optional[int] = None
    budget: Optional[int] = None
    ratio: Optional[float] = None
    input: Optional[Path] = None
    out: Optional[Path] = None
    seed: int = 0


def _ints(text: str, count: int, label: str) -> Tuple[int, ...]:
    parts = text.split(",")
    try:
        values = tuple(int(part) for part in parts)
    except ValueError:
        values = ()
    if len(values) != count:
        raise forms.ValidationError(
            f"Ожидается {label}: {count} целых через запятую, "
            f"получено {text!r}."
        )
    return values


def _kind_with_args(text: str, kinds: dict) -> Tuple[str, tuple]:
    """Разбирает `name` или `name:args` по таблице {name: (число, подпись)}."""
    name, _, rest = text.partition(":")
    if name not in kinds:
        raise forms.ValidationError(
            f"Неизвестный вид {name!r}; допустимы: {', '.join(kinds)}."
        )
    count, label = kinds[name]
    if count is None:
        if not rest:
            raise forms.ValidationError(f"Для {name} нужен аргумент.")
        return name, (rest,)
    if count == 0:
        if rest:
            raise forms.ValidationError(f"{name} не принимает аргументов.")
        return name, ()
    return name, _ints(rest, count, label)


class LabForm(forms.Form):
    """Общие флаги: --out и --seed."""

    subcommand = ""

    out = forms.CharField(required=False)
    seed = forms.IntegerField(required=False, min_value=0)

    def run_config(self) -> RunConfig:
        data = self.cleaned_data
        seed = data.get("seed")
        if seed is None:
            seed = settings.CONGRUENCE_LAB_DEFAULT_SEED
        return RunConfig(
            subcommand=self.subcommand,
            modulus=data.get("modulus"),
            xmax=data.get("xmax"),
            budget=data.get("budget"),
            ratio=data.get("ratio"),
            input=Path(data["input"]) if data.get("input") else None,
            out=Path(data["out"]) if data.get("out") else None,
            seed=seed,
        )


class InputMixin(forms.Form):
    """Файл ряда QS1; разобранный ряд кладётся в cleaned_data['series']."""

    input = forms.CharField()

    def clean_input(self):
        path = Path(self.cleaned_data["input"])
        if not path.is_file():
            raise forms.ValidationError(f"Файл {path} не найден.")
        return str(path)

    def clean(self):
        cleaned = super().clean()
        if "input" in cleaned:
            try:
                cleaned["series"] = read_series(cleaned["input"])
            except LabError as exc:
                raise forms.ValidationError(str(exc))
        return cleaned


class FormMetaMixin(forms.Form):
    """Вес `int:k`/`half:λ`, уровень и характер."""

    weight = forms.CharField()
    level = forms.IntegerField(min_value=1)
    char = forms.CharField(required=False)

    def clean(self):
        cleaned = super().clean()
        if {"weight", "level"} <= cleaned.keys():
            try:
                cleaned["meta"] = FormMeta.parse(
                    cleaned["weight"],
                    cleaned["level"],
                    cleaned.get("char") or "trivial",
                )
            except LabError as exc:
                raise forms.ValidationError(str(exc))
        meta, series = cleaned.get("meta"), cleaned.get("series")
        if meta is not None and meta.half_integral and series is not None:
            try:
                validate_modulus(series.modulus, odd=True)
            except LabError as exc:
                raise forms.ValidationError(str(exc))
        return cleaned


class CensusForm(LabForm):
    subcommand = "census"
    sequence_kinds = {
        "partition": (0, ""),
        "regular": (2, "p,a"),
        "file": (None, "PATH"),
    }

    sequence = forms.CharField()
    modulus = forms.IntegerField(min_value=1, max_value=MAX_MODULUS)
    xmax = forms.IntegerField(min_value=0)
    s = forms.IntegerField(min_value=0, required=False)
    ratio = forms.FloatField(required=False)
    scale = forms.ChoiceField(
        choices=(("half", "half"), ("full", "full")), required=False
    )
    linear_zero = forms.BooleanField(required=False)
    workers = forms.IntegerField(min_value=1, required=False)

    def clean_sequence(self):
        kind, args = _kind_with_args(
            self.cleaned_data["sequence"], self.sequence_kinds
        )
        if kind == "regular" and (args[0] == 2 or not is_prime(args[0])):
            raise forms.ValidationError(
                f"regular:p,a требует нечётного простого p: {args[0]}."
            )
        return kind, args

    def clean_ratio(self):
        ratio = self.cleaned_data["ratio"]
        if ratio is None:
            return settings.CONGRUENCE_LAB_CHECKPOINT_RATIO
        if ratio <= 1:
            raise forms.ValidationError("Шаг контрольных точек: нужно > 1.")
        return ratio


class HeckeForm(FormMetaMixin, InputMixin, LabForm):
    subcommand = "hecke"

    p = forms.CharField(required=False)

    def clean_p(self):
        values = self.data.get("p") or []
        try:
            primes = [int(value) for value in values]
        except (TypeError, ValueError):
            raise forms.ValidationError(f"Некорректные --p: {values!r}.")
        for p in primes:
            if not is_prime(p):
                raise forms.ValidationError(f"--p {p} не простое.")
        return primes

    def clean(self):
        cleaned = super().clean()
        meta = cleaned.get("meta")
        if meta is not None and meta.half_integral and 2 in cleaned.get(
                "p", []):
            raise forms.ValidationError("Полуцелый вес: --p 2 недопустимо.")
        return cleaned


class ProbeForm(FormMetaMixin, InputMixin, LabForm):
    subcommand = "probe"

    scalar = forms.IntegerField(required=False)
    residue_class = forms.CharField(required=False)
    budget = forms.IntegerField(min_value=1, required=False)
    min_precision = forms.IntegerField(min_value=1, required=False)
    n0 = forms.IntegerField(min_value=1, required=False)
    power = forms.IntegerField(min_value=0, required=False)
    workers = forms.IntegerField(min_value=1, required=False)

    def clean_residue_class(self):
        text = self.cleaned_data["residue_class"]
        return _ints(text, 2, "a,m") if text else None

    def clean(self):
        cleaned = super().clean()
        meta = cleaned.get("meta")
        if cleaned.get("n0") is not None:
            if meta is not None and meta.half_integral:
                raise forms.ValidationError(
                    "--n0/--power применимы только к целому весу."
                )
            if cleaned.get("power") is None:
                raise forms.ValidationError("С --n0 нужен --power.")
        return cleaned


class PiSForm(LabForm):
    subcommand = "pis"
    set_kinds = {
        "file": (None, "PATH"),
        "class": (2, "a,m"),
        "all": (0, ""),
    }

    prime_set = forms.CharField()
    s = forms.IntegerField(min_value=1)
    x = forms.IntegerField(min_value=0)
    repeat = forms.BooleanField(required=False)

    def clean_prime_set(self):
        kind, args = _kind_with_args(
            self.cleaned_data["prime_set"], self.set_kinds
        )
        if kind == "file" and not Path(args[0]).is_file():
            raise forms.ValidationError(f"Файл {args[0]} не найден.")
        return kind, args


class SquareClassForm(InputMixin, LabForm):
    subcommand = "squareclass"

    ell = forms.IntegerField(min_value=3)
    growth = forms.CharField(required=False)

    def clean_ell(self):
        ell = self.cleaned_data["ell"]
        if not is_prime(ell):
            raise forms.ValidationError(f"--ell {ell} не простое.")
        return ell

    def clean_growth(self):
        text = self.cleaned_data["growth"]
        if not text:
            return []
        try:
            return [int(part) for part in text.split(",")]
        except ValueError:
            raise forms.ValidationError(f"Некорректный --growth: {text!r}.")


class PTableForm(LabForm):
    subcommand = "ptable"
    table_kinds = {
        "partition": (0, ""),
        "regular": (2, "p,a"),
        "ftarget": (2, "l,j"),
        "gtarget": (2, "l,j"),
        "rtarget": (3, "p,a,j"),
    }

    kind = forms.CharField()
    modulus = forms.IntegerField(
        min_value=1, max_value=MAX_MODULUS, required=False
    )
    xmax = forms.IntegerField(min_value=0)
    format = forms.ChoiceField(
        choices=(("qs1", "qs1"), ("csv", "csv")), required=False
    )

    def clean_kind(self):
        return _kind_with_args(self.cleaned_data["kind"], self.table_kinds)

    def clean(self):
        cleaned = super().clean()
        kind = cleaned.get("kind")
        if kind and kind[0] in ("partition", "regular") and not cleaned.get(
                "modulus"):
            raise forms.ValidationError(f"Для {kind[0]} нужен --modulus.")
        return cleaned


class SelfCheckForm(LabForm):
    subcommand = "selfcheck"

    trials = forms.IntegerField(min_value=1, required=False)
