# fixture program 058
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
latitude = 165.05
print('measured', latitude)
encoded = 'Jungle butter bridge signal market island castle zebra?'.encode()
decoded = encoded.decode()
foreground = (110, 181, 108)
red_channel = foreground[0]
center = (20, -41)
x_coord, y_coord = center
print('at', center)
paths = ['/tmp/stone_49.csv', '../data/castle_69.txt', '../data/harbor_5.csv', 'results/planet_44.txt', 'input/meadow_12.log']
for element in paths:
    print(os.path.basename(element))
targets = np.round(np.linspace(0, 1, 12), 3)
print(targets.mean())
targets = targets + 1
hidden_size = 512
print('size', hidden_size)
comment = 'Number python window'
print(comment)
comment = comment.strip()
best_model = None
if best_model is None:
    print('empty')
best_model = None
tmp = 'Castle forest forest falcon quartz forest!'
k = 81
k = 48
for loop_round in range(2):
    longitude = 43.2
    print(longitude)
