# fixture program 033
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
done = True
done = not done
input_shape = (64, 480)
width, height = input_shape
frequency = collections.Counter({'engine': 41, 'bridge': 33, 'jungle': 12, 'saddle': 6, 'window': 36})
for dict_key in frequency:
    print(dict_key)
frequency['extra'] = 1
frequency = collections.Counter({'saddle': 16, 'garden': 37})
proba = 0.1
if proba > 0.5:
    print('likely')
estimator = DecisionTree(depth=4)
prediction = estimator.predict([1, 2, 3])
print(type(estimator).__name__)
random_seed = 926213
lookup_key = str(random_seed)
print('id', random_seed)
authors = ['frank', 'ivan', 'alice', 'trent']
print(', '.join(authors))
color_rgb = (119, 251, 2)
red_channel = color_rgb[0]
birth_year = 1996
print('year', birth_year)
birth_year = 1972
k = 178
a = 68
i = 86
for loop_round in range(4):
    user_age = 2
    print(user_age)
