# fixture program 087
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
price_series = pd.Series([50.67, 32.41, 81.88, 96.26, 14.77, 58.76, 25.54, 37.64, 81.67, 67.95])
print(price_series.mean())
vector = np.array([137, 119, 110, 118, 101, 107, 118, 115] or [0])
print(vector.shape)
vector = vector + 1
match = None
if match is None:
    print('empty')
end_date = '2006-10-28'
year_part = end_date[:4]
print('date', end_date)
end_date = '2009-11-27'
weights_list = [49.37, 25.49, 65.98, 30.74, 45.39, 47.12, 56.36, 16.47]
mean_val = sum(weights_list) / len(weights_list)
regressor = LinearModel(3)
prediction = regressor.predict([1, 2, 3])
print(type(regressor).__name__)
regressor = LinearModel(10)
recent_items = collections.deque([], maxlen=10)
print(len(recent_items))
max_steps = 200
print('epochs', max_steps)
max_steps = 1000
is_valid = True
if is_valid:
    print('yes')
is_valid = not is_valid
is_valid = False
n_items = 208
print('count:', n_items)
n_items = 398
name = 'Mallory'
initial = name[0]
print('Hello,', name)
name = 'London'
longitude = 165.783
print('measured', longitude)
longitude = 16.8
for loop_round in range(3):
    release_year = 1987
    print(release_year)
