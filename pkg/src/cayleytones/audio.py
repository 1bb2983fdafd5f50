"""Equal-temperament frequencies and sample-level rendering to WAV."""

from __future__ import annotations

import wave
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .music import MusicalSystem

SAMPLE_RATE = 44100


class InvalidEnvelopeError(ValueError):
    """Raised when an envelope cannot fit inside a note's duration."""


def note_frequency(system: MusicalSystem, k: int, octave_shift: int = 0) -> float:
    """Frequency of note index k: f0 * s^(k/n), shifted by whole octaves.

    Indices are not reduced mod n; octaves above and below are reached
    by larger indices or by the explicit shift. The ladder is climbed by
    repeated multiplication so that transposing the base frequency by j
    steps reproduces note k+j bit for bit.
    """
    ratio = system.s ** (1.0 / system.n)
    f = system.f0
    for _ in range(k):
        f *= ratio
    for _ in range(-k):
        f /= ratio
    for _ in range(octave_shift):
        f *= system.s
    for _ in range(-octave_shift):
        f /= system.s
    return f


@dataclass(frozen=True)
class ToneSpec:
    """A frequency in Hz and a duration in seconds, both positive."""

    frequency: float
    duration: float

    def __post_init__(self) -> None:
        if not self.frequency > 0:
            raise ValueError(f"frequency must be positive, got {self.frequency}")
        if not self.duration > 0:
            raise ValueError(f"duration must be positive, got {self.duration}")


@dataclass(frozen=True)
class SampleBuffer:
    """Immutable mono samples in [-1, 1] at a fixed rate."""

    samples: np.ndarray
    sample_rate: int = SAMPLE_RATE

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=np.float64)
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return len(self.samples)


def _sample_times(duration: float, sample_rate: int) -> np.ndarray:
    count = round(sample_rate * duration)
    return np.arange(count) / sample_rate


def pure_tone(spec: ToneSpec, sample_rate: int = SAMPLE_RATE) -> SampleBuffer:
    """samples[i] = sin(2*pi*f*t_i) with t_i = i / rate."""
    t = _sample_times(spec.duration, sample_rate)
    return SampleBuffer(np.sin(2.0 * np.pi * spec.frequency * t), sample_rate)


@dataclass(frozen=True)
class Envelope:
    """Linear attack-decay-sustain-release amplitude profile in [0, 1]."""

    attack: float = 0.02
    decay: float = 0.05
    sustain_level: float = 0.8
    release: float = 0.05

    def __post_init__(self) -> None:
        if self.attack < 0 or self.decay < 0 or self.release < 0:
            raise ValueError("envelope segment durations must be nonnegative")
        if not 0 <= self.sustain_level <= 1:
            raise ValueError("sustain level must lie in [0, 1]")

    def amplitudes(self, t: np.ndarray, duration: float) -> np.ndarray:
        if self.attack + self.decay + self.release > duration:
            raise InvalidEnvelopeError(
                f"envelope spans {self.attack + self.decay + self.release}s "
                f"but the note lasts {duration}s"
            )
        g = np.full(len(t), self.sustain_level, dtype=np.float64)
        if self.attack > 0:
            m = t < self.attack
            g[m] = t[m] / self.attack
        if self.decay > 0:
            m = (t >= self.attack) & (t < self.attack + self.decay)
            g[m] = 1.0 - (1.0 - self.sustain_level) * (t[m] - self.attack) / self.decay
        if self.release > 0:
            m = t >= duration - self.release
            g[m] = self.sustain_level * (duration - t[m]) / self.release
        return g


def shape_note(
    spec: ToneSpec,
    envelope: Optional[Envelope] = None,
    modulation_depth: float = 0.0,
    sample_rate: int = SAMPLE_RATE,
) -> SampleBuffer:
    """g(t) * sin(2*pi*f*(t + m*sin(2*pi*f*t))).

    With no envelope and zero depth this reduces exactly to pure_tone.
    """
    t = _sample_times(spec.duration, sample_rate)
    phase = 2.0 * np.pi * spec.frequency
    samples = np.sin(phase * (t + modulation_depth * np.sin(phase * t)))
    if envelope is not None:
        samples = envelope.amplitudes(t, spec.duration) * samples
    return SampleBuffer(samples, sample_rate)


def mix_chord(
    buffers: Sequence[SampleBuffer], weights: Optional[Sequence[float]] = None
) -> SampleBuffer:
    """Sample-wise weighted average; weights normalize to sum 1."""
    if not buffers:
        raise ValueError("cannot mix zero buffers")
    rate = buffers[0].sample_rate
    length = len(buffers[0])
    for b in buffers[1:]:
        if b.sample_rate != rate:
            raise ValueError("sample rates differ")
        if len(b) != length:
            raise ValueError("buffer lengths differ")
    if weights is None:
        weights = [1.0] * len(buffers)
    if len(weights) != len(buffers):
        raise ValueError("one weight per buffer required")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    total = float(sum(weights))
    if total == 0:
        raise ValueError("weights must not all be zero")
    mixed = np.zeros(length, dtype=np.float64)
    for buf, w in zip(buffers, weights):
        mixed += (w / total) * buf.samples
    return SampleBuffer(mixed, rate)


@dataclass(frozen=True)
class RenderEvent:
    """One plan entry: a note, a chord, or a rest.

    Notes are (residue, octave_shift) pairs; rests carry none.
    """

    kind: str
    duration: float
    notes: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("note", "chord", "rest"):
            raise ValueError(f"unknown event kind {self.kind!r}")
        if not self.duration > 0:
            raise ValueError("event durations must be positive")
        if self.kind == "rest" and self.notes:
            raise ValueError("rests carry no notes")
        if self.kind == "note" and len(self.notes) != 1:
            raise ValueError("a note event carries exactly one note")
        if self.kind == "chord" and not self.notes:
            raise ValueError("a chord event carries at least one note")


@dataclass(frozen=True)
class RenderPlan:
    """A system plus an ordered list of events to render back to back."""

    system: MusicalSystem
    events: tuple[RenderEvent, ...]

    def __post_init__(self) -> None:
        if not self.events:
            raise ValueError("a render plan needs at least one event")
        for event in self.events:
            for note, _ in event.notes:
                if not 0 <= note < self.system.n:
                    raise ValueError(
                        f"note {note} outside residues of Z_{self.system.n}"
                    )

    @classmethod
    def from_dict(cls, data: dict) -> "RenderPlan":
        from .music import validate_system

        sysdata = data["system"]
        p, q = int(sysdata["p"]), int(sysdata["q"])
        system = validate_system(
            int(sysdata.get("n", p * q)),
            p,
            q,
            float(sysdata.get("s", 2.0)),
            float(sysdata.get("f0", 440.0)),
        )
        events = []
        for entry in data["events"]:
            kind = entry["kind"]
            notes = []
            for item in entry.get("notes", []):
                if isinstance(item, dict):
                    notes.append((int(item["note"]), int(item.get("octave", 0))))
                else:
                    notes.append((int(item), 0))
            events.append(RenderEvent(kind, float(entry["duration"]), tuple(notes)))
        return cls(system, tuple(events))


def envelope_from_dict(data: Optional[dict]) -> Optional[Envelope]:
    """Envelope from a plan file's optional 'envelope' object."""
    if data is None:
        return None
    return Envelope(
        float(data.get("attack", 0.02)),
        float(data.get("decay", 0.05)),
        float(data.get("sustain_level", 0.8)),
        float(data.get("release", 0.05)),
    )


def render(
    plan: RenderPlan,
    envelope: Optional[Envelope] = None,
    modulation_depth: float = 0.0,
    sample_rate: int = SAMPLE_RATE,
) -> SampleBuffer:
    """Concatenate per-event buffers; rests render as silence."""
    pieces = []
    for event in plan.events:
        if event.kind == "rest":
            count = round(sample_rate * event.duration)
            pieces.append(np.zeros(count, dtype=np.float64))
            continue
        voices = [
            shape_note(
                ToneSpec(note_frequency(plan.system, note, octave), event.duration),
                envelope,
                modulation_depth,
                sample_rate,
            )
            for note, octave in event.notes
        ]
        pieces.append(mix_chord(voices).samples)
    return SampleBuffer(np.concatenate(pieces), sample_rate)


def _quantize(samples: np.ndarray) -> np.ndarray:
    """Round half away from zero to int16, clamping to the valid range."""
    scaled = samples * 32767.0
    rounded = np.sign(scaled) * np.floor(np.abs(scaled) + 0.5)
    return np.clip(rounded, -32768, 32767).astype("<i2")


def write_wav(buffer: SampleBuffer, path) -> None:
    """16-bit signed little-endian PCM, mono, standard RIFF header."""
    data = _quantize(buffer.samples).tobytes()
    with wave.open(str(path), "wb") as handle:
        handle.setnchannels(1)
        handle.setsampwidth(2)
        handle.setframerate(buffer.sample_rate)
        handle.writeframes(data)


def read_wav(path) -> SampleBuffer:
    """Read back a mono 16-bit WAV into samples scaled to [-1, 1]."""
    with wave.open(str(path), "rb") as handle:
        if handle.getnchannels() != 1 or handle.getsampwidth() != 2:
            raise ValueError("expected mono 16-bit PCM")
        rate = handle.getframerate()
        raw = handle.readframes(handle.getnframes())
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / 32767.0
    return SampleBuffer(samples, rate)
