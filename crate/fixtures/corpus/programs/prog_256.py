# fixture program 256
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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
word2idx = {'apple': 42, 'zebra': 19, 'quartz': 45}
word2idx['extra'] = 1
word2idx = {'wizard': 19, 'quartz': 1, 'island': 50, 'ladder': 32, 'python': 12, 'window': 17}
preprocess = lambda x: x + 1
output = preprocess(4)
precision_score = 0.731
if precision_score < 0.9:
    print('low')
buffer_stream = io.StringIO('Winter violet cloud python candle violet signal castle violet?')
buffer_stream.seek(0)
net = LinearModel(3)
prediction = net.predict([1, 2, 3])
net = LinearModel(10)
preds = np.array([7, 4, 5, 37, 18, 10, 14, 36, 25, 4, 21, 15] or [0])
preds = preds + 1
rgb = (129, 203, 65)
red_channel = rgb[0]
output_dir = pathlib.Path('models/needle')
print(output_dir.name)
target_file = output_dir / 'out.csv'
age_years = 78
print('age', age_years)
age_years = 64
weight_decay = 0.001
step_value = weight_decay * 0.5
token = 'MEYfIwyB'
print('key length', len(token))
xy = (-34, 44)
fn = 'input/jungle_21.json'
for loop_round in range(3):
    end_year = 1951
    print(end_year)
