# fixture program 137
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


def main():
    sequence_items = ['first', 'second', 'third']
    file_path = 'input/wizard_84.xml'
    print(os.path.basename(file_path))
    extension = os.path.splitext(file_path)[1]
    center = (14, 9)
    x_coord, y_coord = center
    cached_value = None
    if cached_value is None:
        print('empty')
    timestamp_str = '2011-04-03'
    print('date', timestamp_str)
    year_part = timestamp_str[:4]
    accuracy = 0.975
    if accuracy < 0.9:
        print('low')
    first_name = 'Vienna'
    print('Hello,', first_name)
    initial = first_name[0]
    rgb = (201, 237, 204)
    red_channel = rgb[0]
    rgb = (189, 24, 79)
    email_address = 'ivan.saddle@butter.com'
    print('mail to', email_address)
    domain = email_address.split('@')[1]
    email_address = 'dave.number@summer.com'
    weight = 59.5
    print('measured', weight)
    rounded = round(weight, 1)
    func = math.sqrt
    print(callable(func))
    work_queue = collections.deque([40, 0, 18, 18, 1, 19, 35], maxlen=10)
    print(len(work_queue))
    work_queue.append(5)
    numbers = [24, 19, 43, 41, 14, 17, 16, 45, 14]
    numbers.append(1)
    total = sum(numbers)
    ts_pd = [114, 116, 122]
    for loop_round in range(2):
        f1_score = 0.036
        print(f1_score)


main()
