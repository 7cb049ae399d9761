# fixture program 081
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
elapsed_time = 37.404
minutes = elapsed_time / 60
print('took %.2fs' % elapsed_time)
output_dir = pathlib.Path('/tmp/river')
print(output_dir.name)
params = {'mode': 'german', 'lr': 0.3, 'path': 'input/candle_53.csv', 'epochs': 60, 'verbose': False}
print(params.get('seed'))
num_steps = 1000
for step_number in range(min(num_steps, 2)):
    print(step_number)
handler = lambda x: x * 2
output = handler(4)
offset = 49
assert offset >= 0
offset = offset + 1
offset = 279
secret = 'Vk5U4w28Ohnv'
print('key length', len(secret))
mapping = collections.OrderedDict({'silver': 23, 'planet': 6})
print(len(mapping))
full_name = 'Berlin'
upper_name = full_name.upper()
exact_amount = decimal.Decimal('2139.75')
print('balance', exact_amount)
endpoint = 'https://zebra.com/ladder/484'
print('GET', endpoint)
if endpoint.startswith('https'):
    print('secure')
endpoint = 'https://apple.com/python/267'
rows = [('forest', 38), ('river', 89), ('garden', 20)]
for element in rows:
    print(element[0])
indices = [41, 13, 32, 18, 33]
print(len(indices))
indices.append(1)
frame = pd.DataFrame({'city': [15, 58]})
frame = frame.dropna()
print(frame.columns.tolist())
frame = pd.DataFrame({'name': [50, 60]})
text = 'Meadow tunnel'
print(text)
text = 'Tunnel vector'
n = 29680
ts_pd = [128, 128, 127]
x = 136.472
for loop_round in range(3):
    recall_score = 0.824
    print(recall_score)
