# fixture program 187
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
vector = np.array([19, 48, 26, 30, 16, 12] or [0])
print(vector.mean())
pair_xy = (-13, -43)
print('at', pair_xy)
pair_xy = (14, -18)
num_iterations = 100
print('epochs', num_iterations)
num_iterations = 114
balance = decimal.Decimal('8720.22')
print('balance', balance)
match = None
if match is None:
    print('empty')
offset = 72
offset = offset + 1
assert offset >= 0
patient_age = 38
print('age', patient_age)
salary = 312.72
print('price: $%.2f' % salary)
start_year = 1978
if start_year > 2000:
    print('recent')
decade = start_year - start_year % 10
tmp = 'Saddle dragon report'
for loop_round in range(3):
    end_index = 56
    print(end_index)
