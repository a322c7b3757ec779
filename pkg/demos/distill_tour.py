"""Standard distillation versus a student-friendly teacher, on a laptop budget.

Trains a D5C2 teacher and a D3C2 student on 32x32 phantoms and compares
plain student training, standard KD and the two-step student-friendly route.
About half a minute on one core at the default 30 epochs; pass an epoch
count to change it::

    python demos/distill_tour.py 60
"""
import sys

import numpy as np

from sftkd import (KdConfig, TrainConfig, build_dccnn, build_sft_composite, build_student,
                   distill, make_cartesian_mask, make_sample_set, phantom_images, psnr,
                   train_baseline, train_sft, transfer_student_weights)

epochs = int(sys.argv[1]) if len(sys.argv) > 1 else 30
mask = make_cartesian_mask(32, 32, 4, seed=0)
train = make_sample_set(phantom_images(24, 32, seed=0), mask, np.float32)
val = make_sample_set(phantom_images(8, 32, seed=1), mask, np.float32)
zf = np.mean([psnr(a, b) for a, b in zip(val.x_u, val.x)])
print(f"zero-filled input: {zf:.2f} dB")


def best(result):
    return max(r.val_psnr for r in result.records)


cfg = TrainConfig(epochs=epochs)
kd = TrainConfig(epochs=epochs, stage="distill", kd=KdConfig("AT", 0.1))

teacher = train_baseline(build_dccnn(5, 2, dtype=np.float32), cfg, train, val)
print(f"teacher D5C2 ({teacher.model.n_params} params): {best(teacher):.2f} dB")

# every student starts from the same random weights
init = build_student(3, 2, dtype=np.float32)
plain = train_baseline(init.copy(), cfg, train, val)
print(f"student D3C2 ({init.n_params} params), no teacher: {best(plain):.2f} dB")

std = distill(teacher.best_model, init.copy(), kd, train, val)
print(f"standard KD (attention transfer): {best(std):.2f} dB")

# Step 1: the teacher trains with student branches hanging off each block,
# so it learns features a shallow block can follow.
comp = build_sft_composite((5, 2), (3, 2), dtype=np.float32)
sft = train_sft(comp, TrainConfig(epochs=epochs, stage="sft"), train, val)
last = sft.records[-1].terms
print(f"student-friendly teacher: {best(sft):.2f} dB "
      f"(final l_rec_S {last['l_rec_S']:.4f}, l_imit {last['l_imit']:.4f})")

# Step 2: distill into a student whose later blocks are the trained branches.
student = transfer_student_weights(sft.best_model)
friendly = distill(sft.best_model.teacher, student, kd, train, val)
print(f"student-friendly KD: {best(friendly):.2f} dB "
      f"({best(friendly) - best(std):+.2f} dB against standard KD)")
