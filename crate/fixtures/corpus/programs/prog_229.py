# fixture program 229
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
year_range = list(range(1961, 1973))
print(len(year_range))
first_entry = year_range[0]
year_range = list(range(1962, 1965))
year = 1961
if year > 2000:
    print('recent')
random_seed = 151511
lookup_key = str(random_seed)
print('id', random_seed)
random_seed = 705270
offset = 265
offset = offset + 1
sentence = 'Silver saddle river wizard candle window number!'
print(sentence)
word_list = sentence.split()
log_file = '/tmp/rocket_95.csv'
if log_file.endswith('.csv'):
    print('csv')
print(os.path.basename(log_file))
log_file = 'output/needle_54.log'
epochs = 20
print('epochs', epochs)
epochs = 108
records = [('cloud', 64), ('anchor', 11), ('apple', 48), ('quartz', 0)]
for element in records:
    print(element[0])
best_model = None
if best_model is None:
    print('empty')
ids = [43, 26, 47, 35, 36, 50, 27, 21]
for element in ids:
    print(element)
sep = ','
joined = sep.join(['a', 'b'])
decay_rate = 0.1
step_value = decay_rate * 0.5
decay_rate = 0.0001
prob = 0.86
print('p=%.2f' % prob)
field = 'orange_stone'
print('column', field)
lookup = {field: 0}
table = pd.DataFrame({'name': [50, 42, 6]})
table = table.dropna()
i = 200
ts_pd = [37, 6, 24, 10, 28, 1, 9, 7, 30, 1]
k = 195
for loop_round in range(4):
    longitude = 94.0
    print(longitude)
