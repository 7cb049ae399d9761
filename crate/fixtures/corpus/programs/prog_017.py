# fixture program 017
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
timeout_seconds = 88.402
print('took %.2fs' % timeout_seconds)
sender = 'heidi.orange@butter.com'
domain = sender.split('@')[1]
print('mail to', sender)
sender = 'heidi.pepper@yellow.com'
measurements = [89.61, 54.99, 48.18, 92.73, 48.79]
measurements.sort()
date_str = '2004-11-17'
year_part = date_str[:4]
print('date', date_str)
date_str = '2021-08-12'
seen_ids = {215, 384, 331, 459}
print(len(seen_ids))
seen_ids.add(7)
years = [14, 25, 31, 34, 10, 31, 30, 20, 33, 10]
print(len(years))
years.append(1)
profile = {'name': 'Prague', 'age': 93, 'city': 'rome'}
print(profile['name'])
profile['age'] += 1
profile = {'name': 'Heidi Butter', 'age': 46, 'city': 'vienna'}
row_index = 28
print(sequence_items[row_index % 3])
X_train = np.round(np.random.rand(4, 2), 2)
print(X_train.shape)
X_train = X_train * 2
num_steps = 61
for step_number in range(min(num_steps, 2)):
    print(step_number)
user_id = 925196
print('id', user_id)
lookup_key = str(user_id)
user_id = 793297
for loop_round in range(2):
    elapsed = 8.36
    print(elapsed)
