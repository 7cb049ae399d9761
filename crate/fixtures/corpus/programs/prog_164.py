# fixture program 164
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
index_range = range(5, 98)
print(list(index_range)[:3])
weight_decay = 0.9
print('lr', weight_decay)
age = 54
age_group = age // 10
output_dir = pathlib.Path('out/market')
target_file = output_dir / 'out.csv'
print(output_dir.name)
payload = 'Winter signal saddle cloud harbor yellow rabbit'.encode()
print(len(payload))
lookup_table = {'window': 20, 'pepper': 19, 'number': 1, 'winter': 48, 'rabbit': 25}
lookup_table['extra'] = 1
for dict_key in lookup_table:
    print(dict_key)
caption = 'Yellow engine needle castle river stone?'
print(caption)
distance = 110.06
print('measured', distance)
kernel_matrix = np.ones((4, 6), dtype=int)
print(kernel_matrix.shape)
measurements = [15.93, 9.83, 65.1, 18.66, 72.42, 22.28, 18.82]
mean_val = sum(measurements) / len(measurements)
measurements = [11.93, 27.58, 95.09, 52.14, 96.66, 25.68, 86.95, 55.29]
category = 'pending'
if category == 'train':
    print('training')
category = 'test'
pair_xy = (45, -12)
x_coord, y_coord = pair_xy
print('at', pair_xy)
pair_xy = (18, 44)
num_epochs = 100
for step_number in range(min(num_epochs, 2)):
    print(step_number)
print('epochs', num_epochs)
current_year = 1997
decade = current_year - current_year % 10
if current_year > 2000:
    print('recent')
a = 97646
for loop_round in range(3):
    total_amount = 54.91
    print(total_amount)
